#include "badgame/serialize.hpp"

#include "badgame/errors.hpp"

namespace badgame {

namespace {

std::string str(const Rational& r) { return format_rational(r); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) return quad_from_json(j).to_string();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ParamsError("expected an exact value as string or integer, got " + j.dump());
}

}  // namespace

Quad quad_from_json(const Json& j) {
  if (j.is_object()) return Quad(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()));
  if (j.is_string()) return parse_quad(j.get<std::string>());
  if (j.is_number_integer()) return Quad(Rational(std::to_string(j.get<std::int64_t>())));
  throw ParamsError("expected an exact number, got " + j.dump());
}

Quad parse_quad(const std::string& input) {
  std::string text = trim(input);
  if (text.empty()) throw DomainError("empty number");
  const auto root = text.find("sqrt2");
  if (root == std::string::npos) return Quad(parse_rational(text));
  if (root + 5 != text.size()) throw DomainError("sqrt2 must end the expression: " + input);
  // Start of the sqrt2 term: last sign after the first character.
  std::size_t start = 0;
  for (std::size_t i = root; i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/' && text[i - 1] != '*') {
      start = i;
      break;
    }
  }
  std::string a_part = trim(text.substr(0, start));
  std::string term = trim(text.substr(start, root - start));
  bool negative = false;
  if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
    negative = term[0] == '-';
    term = trim(term.substr(1));
  }
  if (!term.empty() && term.back() == '*') term = trim(term.substr(0, term.size() - 1));
  Rational b = term.empty() ? Rational(1) : parse_rational(term);
  if (negative) b = -b;
  Rational a = a_part.empty() ? Rational(0) : parse_rational(a_part);
  return Quad(a, b);
}

ConstructionParams build_params(const ParamsConfig& config) {
  ExponentPair st = ExponentPair::from_strings(config.s, config.t);
  Quad l = parse_quad(config.l);
  ConstructionParams params = [&] {
    if (config.mode == Mode::strict) {
      std::optional<Rational> c;
      if (config.c != "auto") c = parse_rational(config.c);
      return ConstructionParams::strict(st, parse_rational(config.beta), l, c);
    }
    if (config.R.empty()) throw ParamsError("toy mode needs R");
    if (config.c == "auto") throw ParamsError("toy mode needs an explicit c");
    return ConstructionParams::toy(st, l, parse_quad(config.R), parse_rational(config.c));
  }();
  params.set_q_budget(config.q_budget);
  return params;
}

void merge_params(ParamsConfig& config, const Json& j) {
  if (!j.is_object()) throw ParamsError("parameters must be a JSON object");
  if (j.contains("mode")) config.mode = parse_mode(j.at("mode").get<std::string>());
  if (j.contains("s")) config.s = text_of(j.at("s"));
  if (j.contains("t")) config.t = text_of(j.at("t"));
  if (j.contains("beta") && !j.at("beta").is_null()) config.beta = text_of(j.at("beta"));
  if (j.contains("l")) config.l = text_of(j.at("l"));
  if (j.contains("R") && config.mode == Mode::toy) config.R = text_of(j.at("R"));
  if (j.contains("c")) config.c = text_of(j.at("c"));
  if (j.contains("q_budget")) {
    const Json& q = j.at("q_budget");
    config.q_budget = q.is_string() ? std::stoull(q.get<std::string>()) : q.get<std::uint64_t>();
  }
}

Json to_json(const Quad& x) { return Json{{"a", format_rational(x.a())}, {"b", format_rational(x.b())}}; }

Json to_json(const Square& s) {
  return Json{{"x0", to_json(s.x0)}, {"y0", to_json(s.y0)}, {"side", to_json(s.side)}};
}

Json to_json(const Disc& d) {
  return Json{{"center", Json::array({to_json(d.cx), to_json(d.cy)})}, {"radius", to_json(d.radius)}};
}

Json to_json(const RatPoint& p) { return Json{{"p", p.p}, {"r", p.r}, {"q", p.q}}; }

Json to_json(const AttachedPoint& ap, const std::optional<BandIndex>& band) {
  Json j{{"point", to_json(ap.point)},
         {"line", Json{{"A", ap.line.A}, {"B", ap.line.B}, {"C", ap.line.C}}},
         {"height", ap.height.get_str()}};
  j["band"] = band ? Json{{"n", band->n}, {"k", band->k}} : Json(nullptr);
  return j;
}

Json to_json(const Strip& s) {
  return Json{{"A", s.A}, {"B", s.B}, {"C", s.C}, {"width", to_json(s.width)}};
}

Json to_json(const Vertex& v) { return Json(v.path); }

Json to_json(const ConstructionParams& params) {
  Json j{{"mode", to_string(params.mode())},
         {"s", str(params.st().s())},
         {"t", str(params.st().t())}};
  j["beta"] = params.beta() ? Json(str(*params.beta())) : Json(nullptr);
  j["l"] = to_json(params.l());
  j["R"] = to_json(params.R());
  j["c"] = str(params.c());
  j["m"] = ConstructionParams::m;
  j["q_budget"] = params.q_budget();
  return j;
}

Json to_json(const Certification& cert) {
  Json j{{"rounds", cert.rounds},
         {"q_cap", cert.q_cap},
         {"direct_cap", cert.direct_cap},
         {"certified_q", cert.certified_q},
         {"c", str(cert.c)},
         {"result", cert.passed ? "pass" : "fail"}};
  j["witness"] = cert.witness ? to_json(*cert.witness) : Json(nullptr);
  j["direct_scan"] = Json{{"q", cert.direct_scan_q},
                          {"passed", cert.direct_scan_passed},
                          {"min_score", cert.direct_min_score},
                          {"argmin_q", cert.direct_min_q}};
  j["reverification"] = Json{{"points", cert.reverified_points}, {"passed", cert.reverification_passed}};
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

Json to_json(const TypeIWitness& w) {
  Json choices = Json::array();
  for (const auto& [v, picks] : w.choices) {
    choices.push_back(Json{{"vertex", to_json(v)}, {"successors", picks}});
  }
  return Json{{"depth", w.depth}, {"choices", choices}};
}

Square square_from_json(const Json& j) {
  return Square(quad_from_json(j.at("x0")), quad_from_json(j.at("y0")), quad_from_json(j.at("side")));
}

Disc disc_from_json(const Json& j) {
  const Json& c = j.at("center");
  return Disc(quad_from_json(c.at(0)), quad_from_json(c.at(1)), quad_from_json(j.at("radius")));
}

Json transcript_json(const GameState& state, const std::string& bob, std::uint64_t seed,
                     const std::optional<Certification>& cert) {
  Json rounds = Json::array();
  for (const RoundRecord& r : state.rounds()) {
    rounds.push_back(Json{{"n", r.n},
                          {"bob", to_json(r.bob)},
                          {"alice", to_json(r.alice)},
                          {"vertex", to_json(r.vertex)},
                          {"color", r.color},
                          {"survivors_in_block", r.survivors_in_block},
                          {"ratios_exact", r.ratios_exact}});
  }
  Json j{{"params", to_json(state.params())},
         {"lookahead", state.lookahead()},
         {"bob", bob},
         {"seed", seed},
         {"start", Json{{"bob", to_json(state.initial_bob())}, {"alice", to_json(state.initial_alice())}}},
         {"rounds", rounds}};
  j["certification"] = cert ? to_json(*cert) : Json(nullptr);
  return j;
}

GameState replay_transcript(const Json& transcript) {
  ParamsConfig config;
  merge_params(config, transcript.at("params"));
  ConstructionParams params = build_params(config);
  GameState state = GameState::start(params, disc_from_json(transcript.at("start").at("bob")),
                                     transcript.at("lookahead").get<int>());
  if (to_json(state.initial_alice()) != transcript.at("start").at("alice")) {
    throw VerificationFailure("recorded A_0 differs from the replayed one");
  }
  for (const Json& r : transcript.at("rounds")) {
    const RoundRecord& rec = state.play_round(disc_from_json(r.at("bob")));
    if (to_json(rec.alice) != r.at("alice") || to_json(rec.vertex) != r.at("vertex")) {
      throw VerificationFailure("round " + std::to_string(rec.n) +
                                ": replayed answer differs from the transcript");
    }
  }
  return state;
}

}  // namespace badgame
