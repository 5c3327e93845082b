// Survey widget: option buttons while the caller can still vote, and
// result bars whose widths come straight from the server's fractions.

import type { Survey, SurveyResults } from "../types.js";
import { escapeHtml, percent } from "./html.js";

export interface SurveyViewState {
  survey: Survey;
  results: SurveyResults | null;
  answered: boolean;
}

export function canVote(view: SurveyViewState): boolean {
  return view.survey.status === "open" && !view.answered;
}

export function renderResultsBars(survey: Survey, results: SurveyResults): string {
  const rows = survey.options
    .map((option, i) => {
      const width = percent(results.fractions[i] ?? 0);
      return `
        <li class="survey-result-row">
          <span class="survey-option-label">${escapeHtml(option)}</span>
          <div class="survey-bar"><div class="survey-bar-fill" style="width: ${width}"></div></div>
          <span class="survey-count">${results.counts[i] ?? 0}</span>
        </li>`;
    })
    .join("");
  return `
    <ul class="survey-results">${rows}</ul>
    <p class="survey-total">${results.total_respondents} response${results.total_respondents === 1 ? "" : "s"}</p>`;
}

export function renderSurvey(view: SurveyViewState): string {
  const { survey, results } = view;
  const voting = canVote(view);
  const options = voting
    ? `<ul class="survey-options">${survey.options
        .map((option, i) =>
          `<li><button class="survey-vote" data-option="${i}">${escapeHtml(option)}</button></li>`)
        .join("")}</ul>`
    : "";
  const closedNote = survey.status === "closed"
    ? `<p class="survey-closed-note">This survey is closed.</p>`
    : "";
  return `
    <section class="survey-widget${voting ? "" : " survey-readonly"}" data-survey="${survey.id}">
      <h3 class="survey-question">${escapeHtml(survey.question)}</h3>
      ${closedNote}
      ${options}
      ${results ? renderResultsBars(survey, results) : ""}
    </section>`;
}
