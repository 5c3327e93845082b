// The survey answer flow. One POST returns the recorded answer, the
// refreshed aggregate, and the XP feedback, so the bars and the toast
// update from a single round-trip with no follow-up fetches.

import { ApiClient, ApiError } from "../api.js";
import type { SessionState } from "../session.js";
import { absorbRewards } from "../session.js";
import { toastsFor } from "../toast.js";
import type { Survey, SurveyResults } from "../types.js";
import { renderSurvey, type SurveyViewState } from "../render/survey.js";

export interface SurveyFlowOutcome {
  view: SurveyViewState;
  session: SessionState;
  toasts: string[];
  html: string;
}

export async function answerSurveyFlow(
  client: ApiClient,
  session: SessionState,
  survey: Survey,
  optionIndex: number,
): Promise<SurveyFlowOutcome> {
  try {
    const combined = await client.answerSurvey(survey.id, optionIndex);
    const view: SurveyViewState = { survey, results: combined.results, answered: true };
    return {
      view,
      session: absorbRewards(session, combined.gamification),
      toasts: toastsFor(combined.gamification.feedback),
      html: renderSurvey(view),
    };
  } catch (error) {
    if (error instanceof ApiError && error.code === "AlreadyAnswered") {
      // idempotent view: show the read-only results, award nothing
      const { results } = await client.surveyResults(survey.id);
      const view: SurveyViewState = { survey, results, answered: true };
      return { view, session, toasts: [], html: renderSurvey(view) };
    }
    if (error instanceof ApiError && error.code === "SurveyClosed") {
      const { results } = await client.surveyResults(survey.id);
      const closed: Survey = { ...survey, status: "closed" };
      const view: SurveyViewState = { survey: closed, results, answered: false };
      return { view, session, toasts: [], html: renderSurvey(view) };
    }
    throw error;
  }
}

export async function loadSurveyScreen(
  client: ApiClient,
  surveyId: string,
): Promise<{ survey: Survey; results: SurveyResults; html: string }> {
  const survey = await client.survey(surveyId);
  const { results } = await client.surveyResults(surveyId);
  const view: SurveyViewState = { survey, results, answered: false };
  return { survey, results, html: renderSurvey(view) };
}
