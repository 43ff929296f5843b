#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "vca/bigint.hpp"
#include "vca/poset.hpp"

namespace vca {

using WarnFn = std::function<void(const std::string&)>;

// Parse a poset from a JSON object {"n": int, "relations": [[a, b], ...]}
// with 1-based indices, a < b meaning element a is below element b. The
// relations may be any generating set; the transitive closure is computed.
// If the labels are not already a linear extension, the poset is relabeled
// along one and `warn` (when set) receives a human-readable notice.
// Malformed documents raise InconsistentInputError; bad indices, cycles and
// size violations surface as IndexError / CycleError / SizeLimitError.
Poset poset_from_json(const std::string& text, const WarnFn& warn = {},
                      int max_n = Poset::kDefaultMaxN);

// Emit the inverse: {"n": ..., "relations": ...} with the minimal (cover)
// relations, 1-based and sorted. Compact single line, byte-deterministic.
std::string poset_to_json(const Poset& p);

// Arbitrary-precision integers in reports: a JSON number when the value
// fits in 64 bits, otherwise its decimal string.
nlohmann::json bigint_to_json(const BigInt& v);

} // namespace vca
