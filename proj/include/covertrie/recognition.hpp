#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covertrie/bitset.hpp"
#include "covertrie/dta.hpp"

namespace covertrie {

/// What a family of embeddings must blanket in the target tree. Node
/// coverage asks that every target state be the image of some embedding;
/// edge coverage additionally requires every target transition to be
/// traversed. On path automata, edge coverage coincides with the classical
/// string-cover relation; node coverage is strictly weaker (a single
/// letter can node-cover a tree it does not edge-cover).
enum class CoverMode { NodeCoverage, EdgeCoverage };

/// availability.sets[v] holds the cover states q such that the whole
/// cover subtree rooted at q embeds below target node v: every transition
/// out of q finds the matching child edge under v, recursively. Childless
/// cover states embed below every node.
struct AvailabilityMap {
    std::vector<StateBitset> sets;
    bool operator==(const AvailabilityMap&) const = default;
};

/// pruned.sets[v] holds the roles node v plays across the maximal family
/// of embeddings: the cover root wherever an occurrence can anchor, plus
/// every continuation of a parent role along the connecting edge.
struct PrunedMap {
    std::vector<StateBitset> sets;
    bool operator==(const PrunedMap&) const = default;
};

enum class FailureKind {
    RootRoleUnavailable,  // no occurrence can anchor at the target root
    EmptyRoleSet,         // node coverage: a node plays no role at all
    UncoveredEdge,        // edge coverage: no embedding traverses the edge
    FinalMismatch,        // a final target node is never a final image
};

const char* failure_kind_name(FailureKind kind);

/// node is where the failure is detected; for UncoveredEdge it is the
/// child endpoint of the edge that no embedding traverses.
struct CoverFailure {
    FailureKind kind;
    StateId node;
    bool operator==(const CoverFailure&) const = default;
};

/// Anchors of the embedding family: the target nodes at which the cover
/// root is placed. Sorted ascending, duplicate-free.
struct OccurrenceSet {
    std::vector<StateId> anchors;
    bool operator==(const OccurrenceSet&) const = default;
};

/// Work metering, kept identical between the two engines. basic_steps
/// counts constant-time message-combining operations; parallel_rounds
/// counts level-synchronous waves (one per target level per pass);
/// round_steps records the steps spent in each wave.
struct CoverStats {
    std::uint64_t basic_steps = 0;
    std::uint64_t parallel_rounds = 0;
    std::uint64_t messages = 0;
    std::vector<std::uint64_t> round_steps;
};

struct CoverOutcome {
    bool covered = false;
    CoverMode mode = CoverMode::EdgeCoverage;
    AvailabilityMap availability;
    std::optional<PrunedMap> pruned;       // present on success
    std::optional<OccurrenceSet> witness;  // present on success
    std::optional<CoverFailure> failure;   // present on failure
    CoverStats stats;
};

/// Bottom-up pass. Mode-independent: availability only describes where
/// complete occurrences fit, not what they must blanket. Both automata
/// must be valid and share one alphabet (checked by the covers front
/// ends, assumed here).
AvailabilityMap availability_pass(const Dta& cover, const Dta& target,
                                  CoverStats* stats = nullptr);

/// Top-down pass over a computed availability map. Returns the pruned
/// role sets on success or the canonical first failure otherwise: the
/// failure at the smallest (level, node) with structural failures taking
/// precedence over FinalMismatch at the same node. Detects every cover
/// violation except those already visible as RootRoleUnavailable.
std::variant<PrunedMap, CoverFailure> pruning_pass(const Dta& cover, const Dta& target,
                                                   const AvailabilityMap& availability,
                                                   CoverMode mode, CoverStats* stats = nullptr);

/// Decides whether `cover` covers `target`: some family of embeddings,
/// one per anchor, blankets the target per `mode` and hits every final
/// target node with a final cover state. Throws AlphabetMismatch when the
/// alphabets differ. Runs the two passes serially; stats respect
/// basic_steps <= 8 * |cover states| * |target states| and
/// parallel_rounds <= 2 * depth(target) + 2.
CoverOutcome covers(const Dta& cover, const Dta& target,
                    CoverMode mode = CoverMode::EdgeCoverage);

/// Same decision, same outcome, same counters: each level of the target
/// is processed as one synchronous wave with per-node result slots, so
/// the answer and the canonical failure do not depend on scheduling.
CoverOutcome covers_parallel(const Dta& cover, const Dta& target,
                             CoverMode mode = CoverMode::EdgeCoverage);

/// Anchors of the maximal family: every target node whose pruned role set
/// contains the cover root.
OccurrenceSet extract_occurrences(const Dta& cover, const Dta& target, const PrunedMap& pruned);

/// embedding[q] is the target node playing cover state q. Total; the
/// image is forced by the anchor because both trees are deterministic.
using Embedding = std::vector<StateId>;

/// Reconstructs the unique embedding anchored at `anchor`, or nullopt if
/// the cover does not fully fit below it.
std::optional<Embedding> expand_occurrence(const Dta& cover, const Dta& target, StateId anchor);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> reasons;
};

/// Independently re-checks a witness against the cover definition: every
/// anchor expands to a total embedding, their images blanket the target
/// per `mode`, and every final target node is the image of a final cover
/// state. Used by tests and by witness composition.
VerifyResult verify_witness(const Dta& cover, const Dta& target, const OccurrenceSet& witness,
                            CoverMode mode);

}  // namespace covertrie
