#include "vca/poset_io.hpp"

#include <utility>
#include <vector>

#include "vca/errors.hpp"

namespace vca {

Poset poset_from_json(const std::string& text, const WarnFn& warn, int max_n) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InconsistentInputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InconsistentInputError("expected a JSON object with \"n\" and \"relations\"");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw InconsistentInputError("field \"n\" must be an integer");
    if (!doc.contains("relations") || !doc["relations"].is_array())
        throw InconsistentInputError("field \"relations\" must be an array of pairs");
    long long n = doc["n"].get<long long>();
    if (n < 0) throw DomainError("\"n\" must be nonnegative");
    if (n > Poset::kHardMaxN)
        throw SizeLimitError("\"n\" exceeds the supported maximum of " +
                             std::to_string(Poset::kHardMaxN));
    std::vector<std::pair<int, int>> relations;
    for (const auto& entry : doc["relations"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw InconsistentInputError(
                "each relation must be a pair [a, b] of integers");
        long long a = entry[0].get<long long>();
        long long b = entry[1].get<long long>();
        if (a < 1 || a > n || b < 1 || b > n)
            throw IndexError("relation indices must lie in 1.." + std::to_string(n));
        relations.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n == 0) return Poset::empty(); // any relation was rejected above
    Poset p = Poset::from_cover_relations(static_cast<int>(n), relations, max_n);
    if (p.naturally_labeled()) return p;
    auto [relabeled, perm] = natural_relabel(p);
    if (warn) {
        std::string msg =
            "input labels are not a linear extension; relabeled (old->new):";
        for (std::size_t i = 0; i < perm.size(); ++i)
            msg += " " + std::to_string(i + 1) + "->" + std::to_string(perm[i] + 1);
        warn(msg);
    }
    return relabeled;
}

std::string poset_to_json(const Poset& p) {
    nlohmann::json relations = nlohmann::json::array();
    for (auto [a, b] : p.cover_relations())
        relations.push_back(nlohmann::json::array({a + 1, b + 1}));
    nlohmann::json doc;
    doc["n"] = p.size();
    doc["relations"] = std::move(relations);
    return doc.dump();
}

nlohmann::json bigint_to_json(const BigInt& v) {
    if (fits_int64(v)) return to_int64(v);
    return to_string(v);
}

} // namespace vca
