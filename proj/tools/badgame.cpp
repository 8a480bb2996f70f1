// badgame: command-line front end for the construction, the game and the
// verification suites. Every report is JSON (dynamics writes CSV).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "badgame/dynamics.hpp"
#include "badgame/errors.hpp"
#include "badgame/game.hpp"
#include "badgame/suites.hpp"

using namespace badgame;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3, kVacuous = 4 };

struct Settings {
  std::optional<std::string> config_path;
  std::optional<std::string> params_json;
  std::optional<std::string> mode, s, t, beta, l, R, c;
  std::optional<std::uint64_t> q_budget;
  std::optional<std::uint64_t> seed;
  std::optional<int> lookahead;
  std::optional<int> rounds;
  std::optional<std::string> out;
};

// Resolved configuration: defaults < --config file < --params < BADGAME_QBUDGET < flags.
struct Config {
  ParamsConfig params;
  std::uint64_t seed = 0;
  int lookahead = 1;
  std::optional<int> rounds;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamsError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the text starts with '{', else a file path.
Json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  const std::string body = first != std::string::npos && text[first] == '{' ? text : slurp(text);
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParamsError(std::string("malformed JSON: ") + e.what());
  }
}

void merge_run_keys(Config& config, const Json& j) {
  merge_params(config.params, j);
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("lookahead")) config.lookahead = j.at("lookahead").get<int>();
  if (j.contains("rounds")) config.rounds = j.at("rounds").get<int>();
}

Config resolve(const Settings& set) {
  Config config;
  if (set.config_path) merge_run_keys(config, json_argument(*set.config_path));
  if (set.params_json) merge_run_keys(config, json_argument(*set.params_json));
  if (const char* env = std::getenv("BADGAME_QBUDGET")) {
    try {
      config.params.q_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw ParamsError(std::string("BADGAME_QBUDGET is not an integer: ") + env);
    }
  }
  if (set.mode) config.params.mode = parse_mode(*set.mode);
  if (set.s) config.params.s = *set.s;
  if (set.t) config.params.t = *set.t;
  if (set.beta) config.params.beta = *set.beta;
  if (set.l) config.params.l = *set.l;
  if (set.R) config.params.R = *set.R;
  if (set.c) config.params.c = *set.c;
  if (set.q_budget) config.params.q_budget = *set.q_budget;
  if (set.seed) config.seed = *set.seed;
  if (set.lookahead) config.lookahead = *set.lookahead;
  if (set.rounds) config.rounds = *set.rounds;
  return config;
}

void emit(const Settings& set, const std::string& text) {
  if (set.out) {
    std::ofstream out(*set.out);
    if (!out) throw ParamsError("cannot write " + *set.out);
    out << text;
  } else {
    std::cout << text;
  }
}

void emit_json(const Settings& set, const Json& j) { emit(set, j.dump(2) + "\n"); }

int suite_exit(const SuiteReport& report) {
  if (report.violations > 0) return kViolation;
  if (report.vacuous) return kVacuous;
  return kOk;
}

std::vector<std::uint64_t> parse_counts(const std::string& text) {
  std::vector<std::uint64_t> counts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) counts.push_back(std::stoull(item));
  return counts;
}

Disc default_b0() { return Disc(Quad(0), Quad(0), Quad(0, 24)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt game for weighted badly approximable vectors"};
  app.require_subcommand(1);
  Settings set;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", set.config_path, "JSON config file");
    cmd->add_option("--params", set.params_json, "parameter JSON (inline or path)");
    cmd->add_option("--mode", set.mode, "strict | toy");
    cmd->add_option("--s", set.s, "exponent s (rational)");
    cmd->add_option("--t", set.t, "exponent t (rational)");
    cmd->add_option("--beta", set.beta, "Bob's ratio beta (rational)");
    cmd->add_option("--l", set.l, "side l of the root square (a+b*sqrt2)");
    cmd->add_option("--R", set.R, "R in toy mode (a+b*sqrt2)");
    cmd->add_option("--c", set.c, "badness constant c (rational or auto)");
    cmd->add_option("--q-budget", set.q_budget, "largest denominator range per scan");
    cmd->add_option("--seed", set.seed, "seed for all randomness");
    cmd->add_option("--out", set.out, "write the report here instead of stdout");
  };

  // attach
  std::int64_t ap_p = 0, ap_r = 0, ap_q = 1;
  auto* attach = app.add_subcommand("attach", "attach a line to p/q, r/q and classify it");
  add_common(attach);
  attach->add_option("--p", ap_p)->required();
  attach->add_option("--r", ap_r)->required();
  attach->add_option("--q", ap_q)->required();

  // classify
  std::string region_arg;
  int cl_n = 1;
  std::optional<int> cl_k;
  auto* classify = app.add_subcommand("classify", "enumerate the band points whose boxes meet a region");
  add_common(classify);
  classify->add_option("--region", region_arg, "square JSON {x0,y0,side}")->required();
  classify->add_option("--n", cl_n, "band")->required();
  classify->add_option("--k", cl_k, "sub-band");

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  std::int64_t samples = -1, qmax_aug = 200;
  int strip_k = 1;
  std::string counts_arg = "1,110";
  auto* v_aug = verify->add_subcommand("lemma-aug", "exhaustive line attachment check");
  auto* v_const = verify->add_subcommand("constancy", "line constancy at the first active levels");
  auto* v_strip = verify->add_subcommand("strip", "strip containment at the first active levels");
  auto* v_count = verify->add_subcommand("stripcount", "strip hit counts");
  auto* v_grid = verify->add_subcommand("grid", "block containment for random squares");
  auto* v_growth = verify->add_subcommand("growth", "growth recursion and slack");
  for (auto* cmd : {v_aug, v_const, v_strip, v_count, v_grid, v_growth}) {
    add_common(cmd);
    cmd->add_option("--samples", samples, "number of random instances");
  }
  v_aug->add_option("--qmax", qmax_aug, "largest denominator");
  v_count->add_option("--k", strip_k, "depth below the root");
  v_growth->add_option("--counts", counts_arg, "a_0,a_1,...");

  // tree search
  auto* tree = app.add_subcommand("tree", "colored trees");
  tree->require_subcommand(1);
  auto* search = tree->add_subcommand("search", "depth-h type-(I) subtree of a random survivor set");
  add_common(search);
  std::int64_t tr_n = 16, tr_d = 4;
  int tr_depth = 4;
  unsigned alive = 800;
  search->add_option("--n", tr_n, "successors per vertex");
  search->add_option("--d", tr_d, "colors");
  search->add_option("--depth", tr_depth, "depth h");
  search->add_option("--alive", alive, "survival probability in permille");

  // play
  auto* play = app.add_subcommand("play", "play the game and certify the outcome");
  add_common(play);
  std::string bob_arg = "concentric";
  std::int64_t q_cap = 1000000000;
  std::optional<std::string> b0_arg;
  play->add_option("--rounds", set.rounds, "rounds (default: first active level + 3)");
  play->add_option("--bob", bob_arg, "concentric | seeded-random | steering:x,y");
  play->add_option("--lookahead", set.lookahead, "Alice's search depth (>= 1)");
  play->add_option("--qcap", q_cap, "cap on the certified denominator");
  play->add_option("--b0", b0_arg, "Bob's first disc JSON {center:[x,y], radius}");

  // certify
  auto* certify = app.add_subcommand("certify", "certify a region or re-certify a transcript");
  add_common(certify);
  std::optional<std::string> cert_region, cert_transcript;
  std::int64_t cert_qmax = 0;
  certify->add_option("--region", cert_region, "square JSON {x0,y0,side}");
  certify->add_option("--qmax", cert_qmax, "largest denominator");
  certify->add_option("--transcript", cert_transcript, "saved transcript to replay");

  // dynamics
  auto* dyn = app.add_subcommand("dynamics", "systole along the diagonal flow (CSV)");
  add_common(dyn);
  std::string dx = "1/2", dy = "1/2";
  double umax = 5, step = 0.1;
  dyn->add_option("--x", dx);
  dyn->add_option("--y", dy);
  dyn->add_option("--umax", umax);
  dyn->add_option("--step", step);

  CLI11_PARSE(app, argc, argv);

  try {
    const Config config = resolve(set);
    auto params = [&] { return build_params(config.params); };

    if (*attach) {
      ConstructionParams prm = params();
      AttachedPoint a = attach_line(RatPoint::make(ap_p, ap_r, ap_q), prm.st());
      emit_json(set, to_json(a, band_of(a, prm)));
      return kOk;
    }

    if (*classify) {
      ConstructionParams prm = params();
      Square region = square_from_json(json_argument(region_arg));
      Json pts = Json::array();
      for (const AttachedPoint& a : enumerate_band(region, cl_n, cl_k, prm)) {
        pts.push_back(to_json(a, band_of(a, prm)));
      }
      Json j{{"region", to_json(region)}, {"n", cl_n}};
      j["k"] = cl_k ? Json(*cl_k) : Json(nullptr);
      j["count"] = pts.size();
      j["points"] = pts;
      emit_json(set, j);
      return kOk;
    }

    if (*verify) {
      SuiteReport report;
      if (*v_aug) {
        report = lemma_aug_suite(ExponentPair::from_strings(config.params.s, config.params.t), qmax_aug);
      } else if (*v_const || *v_strip) {
        report = line_lemma_suite(params(), samples < 0 ? 100 : samples, config.seed, bool(*v_strip));
      } else if (*v_count) {
        report = stripcount_suite(params(), strip_k, samples < 0 ? 10000 : samples, config.seed);
      } else if (*v_grid) {
        report = grid_suite(params(), samples < 0 ? 100000 : samples, config.seed);
      } else {
        report = growth_suite(parse_counts(counts_arg));
      }
      emit_json(set, report.to_json());
      return suite_exit(report);
    }

    if (*search) {
      TreeShape shape(tr_n, tr_d, tr_depth);
      SurvivalPredicate survives = hashed_survival(config.seed, alive);
      auto witness = find_type_I(shape, survives, tr_depth);
      Json j{{"shape", Json{{"N", tr_n}, {"D", tr_d}, {"depth", tr_depth}}},
             {"seed", config.seed},
             {"alive_permille", alive},
             {"found", witness.has_value()}};
      j["witness"] = witness ? to_json(*witness) : Json(nullptr);
      const bool valid = !witness || is_valid_type_I(shape, survives, *witness);
      j["valid"] = valid;
      emit_json(set, j);
      return valid ? kOk : kViolation;
    }

    if (*play) {
      ConstructionParams prm = params();
      const int rounds = config.rounds ? *config.rounds : prm.first_active_level() + 3;
      if (rounds < 0) throw ParamsError("rounds must be nonnegative");
      BobStrategy bob = BobStrategy::parse(bob_arg, config.seed);
      Disc b0 = b0_arg ? disc_from_json(json_argument(*b0_arg)) : default_b0();
      GameState state = GameState::start(prm, b0, config.lookahead);
      std::optional<std::string> failure;
      int code = kOk;
      try {
        for (int i = 0; i < rounds; ++i) state.play_round(bob_move(bob, state));
      } catch (const IllegalMove& e) {
        failure = std::string("illegal move: ") + e.what();
        code = kViolation;
      } catch (const DeadEnd& e) {
        failure = std::string("dead end: ") + e.what();
        code = kViolation;
      }
      std::optional<Certification> cert;
      if (!failure) {
        cert = certify_transcript(state, q_cap);
        if (!cert->passed) code = kViolation;
      }
      Json j = transcript_json(state, bob.to_string(), config.seed, cert);
      if (failure) j["error"] = *failure;
      emit_json(set, j);
      return code;
    }

    if (*certify) {
      if (cert_transcript) {
        Json recorded = json_argument(*cert_transcript);
        GameState state = replay_transcript(recorded);
        const Json& old = recorded.at("certification");
        std::int64_t cap = old.is_null() ? q_cap : old.at("q_cap").get<std::int64_t>();
        std::int64_t dcap = old.is_null() ? 100000 : old.at("direct_cap").get<std::int64_t>();
        Certification cert = certify_transcript(state, cap, dcap);
        Json fresh = to_json(cert);
        const bool matches = old.is_null() || fresh == old;
        Json j{{"replayed_rounds", state.round()}, {"certification", fresh}, {"matches_recorded", matches}};
        emit_json(set, j);
        return cert.passed && matches ? kOk : kViolation;
      }
      if (!cert_region) throw ParamsError("certify needs --region or --transcript");
      ConstructionParams prm = params();
      Square region = square_from_json(json_argument(*cert_region));
      BadnessCertificate cert = certify_badness(region, cert_qmax, prm.st(), prm.c(), prm.q_budget());
      Json j{{"region", to_json(region)},
             {"qmax", cert_qmax},
             {"certified", cert.certified},
             {"certified_q", cert.certified_q},
             {"c", format_rational(cert.c)}};
      j["witness"] = cert.witness ? to_json(*cert.witness) : Json(nullptr);
      emit_json(set, j);
      return cert.certified ? kOk : kViolation;
    }

    if (*dyn) {
      ExponentPair st = ExponentPair::from_strings(config.params.s, config.params.t);
      Trace tr = trace(parse_rational(dx), parse_rational(dy), st, uniform_grid(umax, step));
      std::ostringstream csv;
      csv.precision(17);
      csv << "u,systole,vx,vy,vz\n";
      for (const TraceSample& smp : tr.samples) {
        csv << smp.u << ',' << smp.systole.value << ',' << smp.systole.witness[0] << ','
            << smp.systole.witness[1] << ',' << smp.systole.witness[2] << '\n';
      }
      emit(set, csv.str());
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParamsError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kViolation;
  } catch (const Json::exception& e) {
    std::cerr << "malformed JSON input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
