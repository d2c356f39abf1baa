#pragma once

#include "covertrie/dta.hpp"
#include "covertrie/recognition.hpp"

namespace covertrie {

/// Witness for the reflexive case: a single occurrence anchored at the
/// root covers the automaton with itself.
OccurrenceSet identity_witness(const Dta& dta);

/// Transitivity made constructive: from anchors of `first` inside `mid`
/// and anchors of `mid` inside `last`, builds anchors of `first` inside
/// `last` by pushing each first-anchor through each expanded mid
/// occurrence. Both input witnesses are re-verified in the given mode
/// first; an invalid one raises std::invalid_argument carrying the
/// verifier's reason. The result is a valid witness but not necessarily
/// the maximal one.
OccurrenceSet compose_witnesses(const Dta& first, const Dta& mid, const Dta& last,
                                const OccurrenceSet& first_in_mid,
                                const OccurrenceSet& mid_in_last,
                                CoverMode mode = CoverMode::EdgeCoverage);

}  // namespace covertrie
