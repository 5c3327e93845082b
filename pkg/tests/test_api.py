"""HTTP contract: session handling, authorization, response shapes,
error mapping, pagination stability, sparse fieldsets, and compression."""

from __future__ import annotations

import json

import pytest

from tests.conftest import sign_in_admin, sign_up


def promote(client, actor):
    admin = sign_in_admin(client)
    updated = admin.patch(f"/users/{actor.id}", json={"role": "moderator"})
    assert updated.status_code == 200, updated.text
    return admin


def build_thread(client, mod):
    community = mod.post("/communities", json={"title": "Programming Language"}).json()["community"]
    discussion = mod.post(
        f"/communities/{community['id']}/discussions", json={"title": "PHP"}
    ).json()["discussion"]
    return community, discussion


# --- sessions ------------------------------------------------------------


def test_register_returns_user_and_zeroed_rewards(client):
    response = client.post("/users", json={
        "handle": "ada", "secret": "pw", "display_name": "Ada", "terms_version": "v1",
    })
    assert response.status_code == 201
    payload = response.json()
    assert payload["user"]["handle"] == "ada"
    assert payload["user"]["role"] == "ordinary"
    assert payload["gamification"]["xp"] == 0
    assert payload["gamification"]["feedback"] == []


def test_register_without_current_terms_is_rejected(client):
    response = client.post("/users", json={"handle": "ada", "secret": "pw"})
    assert response.status_code == 422
    assert response.json()["error"] == "TermsNotAccepted"
    stale = client.post("/users", json={
        "handle": "ada", "secret": "pw", "terms_version": "v0",
    })
    assert stale.status_code == 422


def test_duplicate_handle_is_conflict(client):
    sign_up(client, "ada")
    response = client.post("/users", json={
        "handle": "ADA", "secret": "pw", "terms_version": "v1",
    })
    assert response.status_code == 409
    assert response.json()["error"] == "DuplicateHandle"


def test_wrong_credentials_are_unauthorized(client):
    sign_up(client, "ada", secret="right")
    wrong = client.post("/auth", json={"handle": "ada", "secret": "wrong"})
    assert wrong.status_code == 401
    assert wrong.json()["error"] == "BadCredentials"
    unknown = client.post("/auth", json={"handle": "ghost", "secret": "x"})
    assert unknown.status_code == 401


def test_token_expires_after_its_ttl(client, clock):
    actor = sign_up(client, "ada")
    assert actor.get("/gamification/me").status_code == 200
    clock.advance(hours=23)
    assert actor.get("/gamification/me").status_code == 200
    clock.advance(hours=2)
    expired = actor.get("/gamification/me")
    assert expired.status_code == 401
    assert expired.headers["www-authenticate"] == "Bearer"


def test_garbage_token_is_unauthorized(client):
    response = client.get("/leaderboard", headers={"Authorization": "Bearer nonsense"})
    assert response.status_code == 401


PROTECTED_ROUTES = [
    ("get", "/users/usr_x", None),
    ("patch", "/users/usr_x", {"bio": "x"}),
    ("post", "/communities", {"title": "x"}),
    ("get", "/communities", None),
    ("get", "/communities/c", None),
    ("post", "/communities/c/discussions", {"title": "x"}),
    ("get", "/communities/c/discussions", None),
    ("post", "/communities/c/surveys", {"question": "q", "options": ["a", "b"]}),
    ("get", "/communities/c/surveys", None),
    ("get", "/discussions/d", None),
    ("get", "/discussions/d/posts", None),
    ("post", "/discussions/d/posts", {"body": "x"}),
    ("get", "/posts/p", None),
    ("post", "/posts/p/likes", {}),
    ("post", "/posts/p/comments", {"body": "x"}),
    ("get", "/posts/p/comments", None),
    ("post", "/posts/p/shares", {}),
    ("post", "/posts/p/hide", {"hidden": True}),
    ("post", "/chats/u/messages", {"body": "x"}),
    ("get", "/chats/u", None),
    ("get", "/surveys/s", None),
    ("post", "/surveys/s/answers", {"option_index": 0}),
    ("get", "/surveys/s/results", None),
    ("post", "/surveys/s/close", {}),
    ("get", "/gamification/me", None),
    ("get", "/leaderboard", None),
    ("post", "/research/grants", {"user_id": "u", "term_document": "t"}),
    ("delete", "/research/grants/u", None),
    ("get", "/research/export/events", None),
    ("get", "/research/export/users", None),
    ("get", "/research/export/graph", None),
    ("get", "/research/metrics", None),
]


@pytest.mark.parametrize("method,path,body", PROTECTED_ROUTES)
def test_every_route_but_signup_signin_terms_needs_a_token(client, method, path, body):
    kwargs = {"json": body} if body is not None else {}
    response = getattr(client, method)(path, **kwargs)
    assert response.status_code == 401, f"{method} {path}: {response.status_code}"
    assert response.json()["error"] == "NotAuthenticated"


# --- authorization ----------------------------------------------------------------


def test_ordinary_users_cannot_create_communities(client):
    actor = sign_up(client, "ada")
    response = actor.post("/communities", json={"title": "No"})
    assert response.status_code == 403
    assert response.json()["error"] == "NotModerator"


def test_admin_promotion_unlocks_community_creation(client):
    actor = sign_up(client, "ada")
    promote(client, actor)
    response = actor.post("/communities", json={"title": "Now Allowed"})
    assert response.status_code == 201


def test_only_admin_assigns_roles(client):
    actor = sign_up(client, "ada")
    other = sign_up(client, "grace")
    response = actor.patch(f"/users/{other.id}", json={"role": "moderator"})
    assert response.status_code == 403
    assert response.json()["error"] == "NotAdministrator"


def test_profiles_are_only_self_editable(client):
    actor = sign_up(client, "ada")
    other = sign_up(client, "grace")
    denied = actor.patch(f"/users/{other.id}", json={"bio": "not yours"})
    assert denied.status_code == 403
    allowed = actor.patch(f"/users/{actor.id}", json={"bio": "researcher"})
    assert allowed.status_code == 200
    assert allowed.json()["user"]["bio"] == "researcher"
    assert "gamification" in allowed.json()
    fetched = other.get(f"/users/{actor.id}")
    assert fetched.json()["bio"] == "researcher"


def test_hide_is_moderator_only_and_masks_content(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    member = sign_up(client, "member")
    post = member.post(
        f"/discussions/{discussion['id']}/posts", json={"body": "spicy take"}
    ).json()["post"]

    denied = member.post(f"/posts/{post['id']}/hide", json={"hidden": True})
    assert denied.status_code == 403

    hidden = mod.post(f"/posts/{post['id']}/hide", json={"hidden": True})
    assert hidden.status_code == 200
    assert hidden.json()["post"]["hidden"] is True
    assert hidden.json()["post"]["body"] == ""

    feed = member.get(f"/discussions/{discussion['id']}/posts").json()
    masked = [item for item in feed["items"] if item["id"] == post["id"]][0]
    assert masked["body"] == ""
    assert masked["hidden"] is True


# --- content flows ------------------------------------------------------------------


def test_full_thread_flow_with_reactions(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    community, discussion = build_thread(client, mod)
    member = sign_up(client, "member")

    post = member.post(
        f"/discussions/{discussion['id']}/posts", json={"body": "hello"}
    ).json()["post"]

    liked = mod.post(f"/posts/{post['id']}/likes")
    assert liked.status_code == 201
    again = mod.post(f"/posts/{post['id']}/likes")
    assert again.status_code == 409
    assert again.json()["error"] == "AlreadyLiked"

    commented = mod.post(f"/posts/{post['id']}/comments", json={"body": "welcome"})
    assert commented.status_code == 201
    comments = member.get(f"/posts/{post['id']}/comments").json()
    assert [c["body"] for c in comments["items"]] == ["welcome"]

    shared = mod.post(
        f"/posts/{post['id']}/shares", json={"target_discussion_id": discussion["id"]}
    )
    assert shared.status_code == 201

    feed = member.get(f"/discussions/{discussion['id']}/posts").json()
    kinds = [item["kind"] for item in feed["items"]]
    assert kinds == ["share", "post"]  # newest first: the share came last


def test_post_with_attachment_round_trips(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    created = mod.post(f"/discussions/{discussion['id']}/posts", json={
        "body": "",
        "attachment": {
            "kind": "pdf", "content_ref": "blob/paper.pdf",
            "size_bytes": 4096, "declared_media_type": "application/pdf",
        },
    })
    assert created.status_code == 201
    attachment = created.json()["post"]["attachment"]
    assert attachment["kind"] == "pdf"
    assert attachment["size_bytes"] == 4096


def test_empty_post_maps_to_unprocessable(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    response = mod.post(f"/discussions/{discussion['id']}/posts", json={"body": ""})
    assert response.status_code == 422
    assert response.json()["error"] == "EmptyPost"


def test_unknown_ids_map_to_not_found(client):
    actor = sign_up(client, "ada")
    assert actor.get("/users/usr_missing").status_code == 404
    assert actor.get("/discussions/dis_missing/posts").status_code == 404
    assert actor.post("/posts/pst_missing/likes").status_code == 404
    assert actor.get("/surveys/srv_missing").status_code == 404
    assert actor.get("/chats/usr_missing").status_code == 404


def test_chat_is_a_two_way_conversation(client):
    ada = sign_up(client, "ada")
    grace = sign_up(client, "grace")
    ada.post(f"/chats/{grace.id}/messages", json={"body": "hi grace"})
    grace.post(f"/chats/{ada.id}/messages", json={"body": "hi ada"})
    ada.post(f"/chats/{grace.id}/messages", json={"body": "how are you?"})

    seen_by_grace = grace.get(f"/chats/{ada.id}").json()
    assert [m["body"] for m in seen_by_grace["items"]] == [
        "hi grace", "hi ada", "how are you?",
    ]
    # a third party has their own empty thread, not this one
    eve = sign_up(client, "eve")
    assert eve.get(f"/chats/{ada.id}").json()["items"] == []


# --- surveys over HTTP ------------------------------------------------------------------


def seeded_survey(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    community, _ = build_thread(client, mod)
    survey = mod.post(f"/communities/{community['id']}/surveys", json={
        "question": "Which language next?",
        "options": ["PHP", "JAVA", "Python"],
    }).json()["survey"]
    return mod, community, survey


def test_survey_answer_is_one_round_trip(client):
    mod, community, survey = seeded_survey(client)
    voter = sign_up(client, "voter")
    answered = voter.post(f"/surveys/{survey['id']}/answers", json={"option_index": 1})
    assert answered.status_code == 201
    payload = answered.json()
    assert payload["response"]["option_index"] == 1
    assert payload["results"]["counts"] == [0, 1, 0]
    assert payload["results"]["total_respondents"] == 1
    kinds = [fb["kind"] for fb in payload["gamification"]["feedback"]]
    assert "xp_gained" in kinds  # the toast data rides along

    duplicate = voter.post(f"/surveys/{survey['id']}/answers", json={"option_index": 0})
    assert duplicate.status_code == 409
    assert duplicate.json()["error"] == "AlreadyAnswered"


def test_survey_close_and_error_mapping(client):
    mod, community, survey = seeded_survey(client)
    voter = sign_up(client, "voter")

    out_of_range = voter.post(f"/surveys/{survey['id']}/answers", json={"option_index": 9})
    assert out_of_range.status_code == 422
    assert out_of_range.json()["error"] == "OptionOutOfRange"

    denied = voter.post(f"/surveys/{survey['id']}/close")
    assert denied.status_code == 403
    closed = mod.post(f"/surveys/{survey['id']}/close")
    assert closed.status_code == 200
    assert closed.json()["survey"]["status"] == "closed"

    late = voter.post(f"/surveys/{survey['id']}/answers", json={"option_index": 0})
    assert late.status_code == 409
    assert late.json()["error"] == "SurveyClosed"

    results = voter.get(f"/surveys/{survey['id']}/results")
    assert results.status_code == 200  # aggregates stay readable


def test_bad_survey_shapes_are_unprocessable(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    community, _ = build_thread(client, mod)
    one_option = mod.post(f"/communities/{community['id']}/surveys", json={
        "question": "q", "options": ["only"],
    })
    assert one_option.status_code == 422
    assert one_option.json()["error"] == "BadOptionCount"
    duplicates = mod.post(f"/communities/{community['id']}/surveys", json={
        "question": "q", "options": ["a", "a"],
    })
    assert duplicates.status_code == 422
    assert duplicates.json()["error"] == "DuplicateOptions"


# --- gamification over HTTP ----------------------------------------------------------------


def test_progress_card_has_everything_a_widget_needs(client, platform):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    member = sign_up(client, "member")
    member.post(f"/discussions/{discussion['id']}/posts", json={"body": "ten points"})
    # one post (10) + four comments (2 each) = 18 XP: level 1, 8 into it
    post = member.get(f"/discussions/{discussion['id']}/posts").json()["items"][0]
    for i in range(4):
        member.post(f"/posts/{post['id']}/comments", json={"body": f"c{i}"})

    card = member.get("/gamification/me").json()
    assert card["xp"] == 18
    assert card["level"] == 1
    assert card["level_floor_xp"] == 10
    assert card["next_level_xp"] == 40
    assert card["xp_into_level"] == 8
    assert card["level_span"] == 30
    assert card["medals"] == [{"index": 1, "name": "Newcomer"}]


def test_leaderboard_orders_by_xp_and_joins_identity(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    heavy = sign_up(client, "heavy")
    light = sign_up(client, "light")
    for i in range(3):
        heavy.post(f"/discussions/{discussion['id']}/posts", json={"body": f"h{i}"})
    light.post(f"/discussions/{discussion['id']}/posts", json={"body": "l"})

    rows = heavy.get("/leaderboard?limit=3").json()["items"]
    assert rows[0]["handle"] == "heavy" and rows[0]["xp"] == 30
    assert rows[1]["handle"] == "light" and rows[1]["xp"] == 10
    assert [row["rank"] for row in rows] == [1, 2, 3]


def test_leaderboard_pages_stay_on_their_snapshot(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    actors = []
    for i, posts in enumerate([3, 2, 1]):
        actor = sign_up(client, f"user{i}")
        for j in range(posts):
            actor.post(f"/discussions/{discussion['id']}/posts", json={"body": f"{i}-{j}"})
        actors.append(actor)

    first = actors[0].get("/leaderboard?limit=2").json()
    assert [row["xp"] for row in first["items"]] == [30, 20]

    # user2 surges past everyone between pages
    for j in range(10):
        actors[2].post(f"/discussions/{discussion['id']}/posts", json={"body": f"surge{j}"})

    second = actors[0].get(f"/leaderboard?limit=2&cursor={first['next_cursor']}").json()
    assert [row["xp"] for row in second["items"]][0] == 10  # still the old score
    fresh = actors[0].get("/leaderboard?limit=2").json()
    # a new walk sees the surge: 11 posts plus the five-posts-a-week bonus
    assert fresh["items"][0]["xp"] == 135


# --- pagination -----------------------------------------------------------------------------


@pytest.fixture
def big_feed(client, platform):
    """250 posts in one discussion, authored directly for speed."""
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    author = platform.store.get_user_by_handle("mod")
    ids = []
    for i in range(250):
        post, _ = platform.domain.create_post(author, discussion["id"], f"post {i:03d}")
        ids.append(post.post_id)
    return mod, discussion, ids


def test_pagination_walks_250_items_as_100_100_50(client, big_feed):
    mod, discussion, ids = big_feed
    seen, cursor, sizes = [], None, []
    while True:
        url = f"/discussions/{discussion['id']}/posts?limit=100"
        if cursor:
            url += f"&cursor={cursor}"
        page = mod.get(url).json()
        sizes.append(len(page["items"]))
        seen.extend(item["id"] for item in page["items"])
        cursor = page["next_cursor"]
        if cursor is None:
            break
    assert sizes == [100, 100, 50]
    assert seen == list(reversed(ids))  # newest first, complete, no duplicates


def test_pages_ignore_items_added_mid_walk(client, platform, big_feed):
    mod, discussion, ids = big_feed
    first = mod.get(f"/discussions/{discussion['id']}/posts?limit=100").json()

    author = platform.store.get_user_by_handle("mod")
    intruders = [
        platform.domain.create_post(author, discussion["id"], f"late {i}")[0].post_id
        for i in range(5)
    ]

    seen = [item["id"] for item in first["items"]]
    cursor = first["next_cursor"]
    while cursor:
        page = mod.get(
            f"/discussions/{discussion['id']}/posts?limit=100&cursor={cursor}"
        ).json()
        seen.extend(item["id"] for item in page["items"])
        cursor = page["next_cursor"]

    assert len(seen) == 250
    assert set(seen) == set(ids)
    assert not set(intruders) & set(seen)
    # a fresh walk sees the late arrivals at the top
    fresh = mod.get(f"/discussions/{discussion['id']}/posts?limit=10").json()
    assert fresh["items"][0]["id"] == intruders[-1]


@pytest.mark.parametrize("bad_limit", [0, -1, 101, 1000])
def test_limit_bounds_are_enforced(client, bad_limit):
    actor = sign_up(client, "ada")
    response = actor.get(f"/communities?limit={bad_limit}")
    assert response.status_code == 400
    assert response.json()["error"] == "LimitOutOfRange"


@pytest.mark.parametrize("bad_cursor", ["@@@", "bm90anNvbg", "eyJ4IjogMX0"])
def test_malformed_cursors_are_rejected(client, bad_cursor):
    actor = sign_up(client, "ada")
    response = actor.get(f"/communities?cursor={bad_cursor}")
    assert response.status_code == 400
    assert response.json()["error"] == "BadCursor"


# --- sparse fieldsets --------------------------------------------------------------------------


def test_fields_param_trims_records_but_keeps_identity(client, big_feed):
    mod, discussion, _ = big_feed
    page = mod.get(f"/discussions/{discussion['id']}/posts?limit=5&fields=body").json()
    for item in page["items"]:
        assert set(item) == {"id", "kind", "body"}


def test_fields_param_on_user_detail(client):
    actor = sign_up(client, "ada")
    trimmed = actor.get(f"/users/{actor.id}?fields=handle,role").json()
    assert set(trimmed) == {"id", "handle", "role"}


def test_unknown_field_names_fail_loudly(client, big_feed):
    mod, discussion, _ = big_feed
    response = mod.get(f"/discussions/{discussion['id']}/posts?fields=body,bogus")
    assert response.status_code == 400
    assert response.json()["error"] == "UnknownField"
    assert "bogus" in response.json()["detail"]


# --- compression --------------------------------------------------------------------------------


def test_large_feed_pages_compress_when_asked(client, big_feed):
    mod, discussion, _ = big_feed
    url = f"/discussions/{discussion['id']}/posts?limit=100"

    plain = mod.get(url, headers={**mod.headers, "Accept-Encoding": "identity"})
    assert "content-encoding" not in plain.headers
    full_size = len(plain.content)
    assert full_size > 1024

    zipped = mod.get(url, headers={**mod.headers, "Accept-Encoding": "gzip"})
    assert zipped.headers.get("content-encoding") == "gzip"
    assert zipped.num_bytes_downloaded < full_size
    assert zipped.json() == plain.json()  # same payload, fewer bytes on the wire


def test_small_responses_skip_compression(client):
    actor = sign_up(client, "ada")
    response = actor.get(
        "/gamification/me", headers={**actor.headers, "Accept-Encoding": "gzip"}
    )
    assert "content-encoding" not in response.headers


# --- research endpoints ---------------------------------------------------------------------------


def seeded_researcher(client):
    researcher = sign_up(client, "researcher")
    admin = sign_in_admin(client)
    granted = admin.post("/research/grants", json={
        "user_id": researcher.id,
        "term_document": "data use agreement v1",
    })
    assert granted.status_code == 201
    return admin, researcher


def test_grant_issuance_is_admin_only(client):
    actor = sign_up(client, "ada")
    other = sign_up(client, "grace")
    denied = actor.post("/research/grants", json={
        "user_id": other.id, "term_document": "doc",
    })
    assert denied.status_code == 403
    assert denied.json()["error"] == "NotAdministrator"


@pytest.mark.parametrize("path", [
    "/research/export/events",
    "/research/export/users",
    "/research/export/graph",
    "/research/metrics",
])
def test_exports_need_an_active_grant(client, path):
    actor = sign_up(client, "ada")
    denied = actor.get(path)
    assert denied.status_code == 403
    assert denied.json()["error"] == "NotAuthorizedResearcher"

    admin, researcher = seeded_researcher(client)
    assert researcher.get(path).status_code == 200

    revoked = admin.delete(f"/research/grants/{researcher.id}")
    assert revoked.status_code == 200
    assert researcher.get(path).status_code == 403


def test_events_export_over_http_is_json_lines(client):
    ada = sign_up(client, "ada")
    grace = sign_up(client, "grace")
    ada.post(f"/chats/{grace.id}/messages", json={"body": "hello"})
    _, researcher = seeded_researcher(client)

    response = researcher.get("/research/export/events")
    assert response.headers["content-type"].startswith("application/x-ndjson")
    lines = response.text.strip().splitlines()
    header = json.loads(lines[0])
    assert header["format"] == "interaction-events"
    verbs = [json.loads(line)["verb"] for line in lines[1:]]
    assert "chat" in verbs and "register" in verbs


def test_users_export_over_http_is_csv(client):
    sign_up(client, "ada")
    _, researcher = seeded_researcher(client)
    response = researcher.get("/research/export/users")
    assert response.headers["content-type"].startswith("text/csv")
    lines = response.text.strip().splitlines()
    assert lines[0].startswith("user_id,handle,role")
    assert len(lines) >= 3  # admin, ada, researcher


def test_graph_export_and_metrics_over_http(client):
    ada = sign_up(client, "ada")
    grace = sign_up(client, "grace")
    ada.post(f"/chats/{grace.id}/messages", json={"body": "edge"})
    _, researcher = seeded_researcher(client)

    graph = researcher.get("/research/export/graph")
    assert graph.text.startswith("# directed interaction graph")
    assert f"{ada.id}\t{grace.id}\t1" in graph.text

    metrics = researcher.get("/research/metrics").json()
    assert metrics["node_count"] == 2
    assert metrics["edge_count"] == 1
    assert metrics["weakly_connected_components"] == 1

    filtered = researcher.get("/research/metrics?kinds=like").json()
    assert filtered["edge_count"] == 0  # the chat edge is filtered out
    assert filtered["kinds"] == ["like"]


def test_metrics_reject_non_interaction_kinds(client):
    _, researcher = seeded_researcher(client)
    response = researcher.get("/research/metrics?kinds=post")
    assert response.status_code == 400
    assert response.json()["error"] == "UnknownKind"


def test_interaction_success_over_http(client):
    mod = sign_up(client, "mod")
    promote(client, mod)
    _, discussion = build_thread(client, mod)
    fan = sign_up(client, "fan")
    post = mod.post(
        f"/discussions/{discussion['id']}/posts", json={"body": "hi"}
    ).json()["post"]
    fan.post(f"/posts/{post['id']}/likes")
    fan.post(f"/posts/{post['id']}/comments", json={"body": "nice"})

    _, researcher = seeded_researcher(client)
    response = researcher.get(f"/research/metrics?post_id={post['id']}")
    assert response.json() == {"post_id": post["id"], "interaction_success": 2}


def test_event_export_accepts_time_ranges(client, clock):
    ada = sign_up(client, "ada")
    grace = sign_up(client, "grace")
    _, researcher = seeded_researcher(client)
    clock.advance(hours=12)  # stay inside everyone's token lifetime
    boundary = clock.now().isoformat()
    clock.advance(hours=1)
    ada.post(f"/chats/{grace.id}/messages", json={"body": "late"})

    late = researcher.get("/research/export/events", params={"range": f"{boundary}/"})
    assert late.status_code == 200, late.text
    verbs = [json.loads(line)["verb"] for line in late.text.strip().splitlines()[1:]]
    assert verbs == ["chat"]  # every registration predates the boundary

    bad = researcher.get("/research/export/events?range=not-a-range")
    assert bad.status_code == 400
    assert bad.json()["error"] == "InvalidRange"
