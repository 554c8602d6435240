#include "liecp/reconstruct.hpp"

#include <stdexcept>

namespace liecp {

Decomposition decompose(const RootSystem& rs, const WeightMultiset& gamma, std::int64_t dim_cap,
                        const TieBreak& tie_break) {
    if (gamma.tag != rs.tag())
        throw TagMismatch("multiset belongs to " + to_string(gamma.tag) + ", not " +
                          to_string(rs.tag()));
    if (gamma.entries.empty())
        throw NotACharacter("the empty multiset is not the weight system of a module");
    for (const auto& [w, m] : gamma.entries) {
        if (w.coords.size() != static_cast<std::size_t>(rs.rank()))
            throw ShapeError("weight " + to_string(w) + " has the wrong length for " +
                             to_string(rs.tag()));
        if (m < 1) throw NotACharacter("multiplicity of " + to_string(w) + " is not positive");
    }

    Decomposition out;
    out.tag = rs.tag();
    std::map<Weight, std::int64_t> remaining = gamma.entries;
    Int left = gamma.total();
    while (!remaining.empty()) {
        // Maximal-height weights; equal-height candidates arrive in
        // ascending map order.
        std::vector<Weight> candidates;
        Rational best_height;
        for (const auto& [w, m] : remaining) {
            const Rational h = weight_height(rs, w);
            if (candidates.empty() || h > best_height) {
                best_height = h;
                candidates.assign(1, w);
            } else if (h == best_height) {
                candidates.push_back(w);
            }
        }
        const std::size_t idx = tie_break ? tie_break(candidates) : candidates.size() - 1;
        if (idx >= candidates.size())
            throw std::logic_error("tie-break hook returned an out-of-range index");
        const Weight pick = candidates[idx];
        if (!is_dominant(pick))
            throw NotACharacter("maximal-height weight " + to_string(pick) +
                                " is not dominant; the multiset is not a character");

        const std::int64_t copies = remaining.at(pick);
        if (Int(copies) * weyl_dim(rs, pick) > left)
            throw NotACharacter("peeling " + std::to_string(copies) + " x V(" + to_string(pick) +
                                ") needs more weights than remain; not a character");
        const WeightMultiset irrep = irrep_weights(rs, pick, dim_cap);
        for (const auto& [w, m] : irrep.entries) {
            const std::int64_t need = copies * m;
            auto it = remaining.find(w);
            if (it == remaining.end() || it->second < need)
                throw NotACharacter("peeling V(" + to_string(pick) + ") drives the multiplicity " +
                                    "of " + to_string(w) + " negative; not a character");
            it->second -= need;
            if (it->second == 0) remaining.erase(it);
        }
        left -= Int(copies) * irrep.total();
        out.entries[pick] += copies;
    }
    return out;
}

}  // namespace liecp
