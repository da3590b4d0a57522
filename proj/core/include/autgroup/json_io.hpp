#pragma once

#include <nlohmann/json.hpp>

#include "autgroup/partitions.hpp"
#include "autgroup/recognizer.hpp"

namespace autgroup {

nlohmann::json automaton_to_json(const MealyAutomaton& a);
/// Throws Error(Validation) on schema violations.
MealyAutomaton automaton_from_json(const nlohmann::json& j);

nlohmann::json ev_periodic_to_json(const EvPeriodicWord& p, const Alphabet& alphabet);
EvPeriodicWord ev_periodic_from_json(const nlohmann::json& j, const Alphabet& alphabet);

/// Elements with their indices and renderings, then both pair sets.
nlohmann::json post_critical_to_json(const PostCriticalData& data, const Alphabet& alphabet);

nlohmann::json chain_to_json(const PartitionChain& chain, const Alphabet& alphabet);

nlohmann::json recognizer_to_json(const Recognizer& m);
Recognizer recognizer_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of a string, printed as 16 hex digits.
std::string fingerprint(std::string_view text);

}  // namespace autgroup
