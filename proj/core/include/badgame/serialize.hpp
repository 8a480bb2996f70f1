#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "badgame/cantor.hpp"
#include "badgame/diophantine.hpp"
#include "badgame/game.hpp"
#include "badgame/params.hpp"
#include "badgame/trees.hpp"

namespace badgame {

using Json = nlohmann::ordered_json;

/// Parses "a", "b*sqrt2", "a+b*sqrt2", "a-sqrt2", ... with rational a, b
/// (the format of Quad::to_string).
Quad parse_quad(const std::string& text);
/// {"a":"num/den","b":"num/den"}, a parse_quad string, or an integer.
Quad quad_from_json(const Json& j);

/// User-facing parameter set; strings keep every value exact.
struct ParamsConfig {
  Mode mode = Mode::strict;
  std::string s = "1/3";
  std::string t = "2/3";
  std::string beta = "1/2";
  std::string l = "2";
  std::string R;  // toy mode only
  std::string c = "auto";
  std::uint64_t q_budget = kDefaultQBudget;
};

ConstructionParams build_params(const ParamsConfig& config);
/// Reads the keys of ParamsConfig from a JSON object, leaving absent keys.
void merge_params(ParamsConfig& config, const Json& j);

Json to_json(const Quad& x);
Json to_json(const Square& s);
Json to_json(const Disc& d);
Json to_json(const RatPoint& p);
Json to_json(const AttachedPoint& ap, const std::optional<BandIndex>& band);
Json to_json(const Strip& s);
Json to_json(const Vertex& v);
Json to_json(const ConstructionParams& params);
Json to_json(const Certification& cert);
Json to_json(const TypeIWitness& w);

Square square_from_json(const Json& j);
Disc disc_from_json(const Json& j);

/// Full transcript: {params, lookahead, bob, seed, start:{bob, alice},
/// rounds:[{n, bob, alice, vertex, color, survivors_in_block, ratios_exact}],
/// certification}.
Json transcript_json(const GameState& state, const std::string& bob, std::uint64_t seed,
                     const std::optional<Certification>& cert);

/// Rebuilds a game from a transcript by replaying Bob's discs; Alice's
/// answers must reproduce the recorded ones (VerificationFailure otherwise).
GameState replay_transcript(const Json& transcript);

}  // namespace badgame
