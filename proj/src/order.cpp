#include "covertrie/order.hpp"

#include <set>
#include <stdexcept>

namespace covertrie {

OccurrenceSet identity_witness(const Dta& dta) { return OccurrenceSet{{dta.root()}}; }

OccurrenceSet compose_witnesses(const Dta& first, const Dta& mid, const Dta& last,
                                const OccurrenceSet& first_in_mid,
                                const OccurrenceSet& mid_in_last, CoverMode mode) {
    auto require_valid = [&](const Dta& cover, const Dta& target, const OccurrenceSet& witness,
                             const char* which) {
        VerifyResult vr = verify_witness(cover, target, witness, mode);
        if (!vr.ok) {
            throw std::invalid_argument(std::string("compose_witnesses: the ") + which +
                                        " witness is invalid: " + vr.reasons.front());
        }
    };
    require_valid(first, mid, first_in_mid, "first-over-mid");
    require_valid(mid, last, mid_in_last, "mid-over-last");

    std::set<StateId> anchors;
    for (StateId u : mid_in_last.anchors) {
        // Verified above, so the expansion is total.
        Embedding psi = *expand_occurrence(mid, last, u);
        for (StateId v : first_in_mid.anchors) anchors.insert(psi[v]);
    }
    OccurrenceSet out;
    out.anchors.assign(anchors.begin(), anchors.end());
    return out;
}

}  // namespace covertrie
