#include "covertrie/recognition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#if defined(COVERTRIE_PARALLEL)
#include <execution>
#endif

namespace covertrie {

namespace {

void check_inputs(const Dta& cover, const Dta& target) {
    if (cover.num_states() == 0 || target.num_states() == 0) {
        throw std::invalid_argument("cover decision requires non-empty automata");
    }
    if (cover.alphabet() != target.alphabet()) {
        throw AlphabetMismatch("cover and target automata use different alphabets");
    }
}

// One node's worth of the bottom-up pass: q fits below v exactly when
// every outgoing cover edge of q finds the matching target edge under v
// and the child state fits below the child node. Returns the number of
// constant-time steps spent.
std::uint64_t availability_at(const Dta& cover, const Dta& target, StateId v,
                              const std::vector<StateBitset>& below, StateBitset& out) {
    std::uint64_t steps = 1;
    const StateId nq = static_cast<StateId>(cover.num_states());
    for (StateId q = 0; q < nq; ++q) {
        steps += 1;
        bool fits = true;
        for (const Transition& t : cover.children(q)) {
            steps += 1;
            auto c = target.child(v, t.symbol);
            if (!c || !below[*c].test(t.to)) {
                fits = false;
                break;
            }
        }
        if (fits) out.set(q);
    }
    return steps;
}

struct PruneContext {
    const Dta& cover;
    const Dta& target;
    const AvailabilityMap& availability;
    CoverMode mode;
    StateBitset cover_finals;
    StateId anchor_role;  // the cover root

    PruneContext(const Dta& cover_, const Dta& target_, const AvailabilityMap& availability_,
                 CoverMode mode_)
        : cover(cover_),
          target(target_),
          availability(availability_),
          mode(mode_),
          cover_finals(static_cast<std::uint32_t>(cover_.num_states())),
          anchor_role(cover_.root()) {
        for (StateId q : cover_.finals()) cover_finals.set(q);
    }
};

struct NodePrune {
    StateBitset roles;
    std::optional<FailureKind> failure;  // at most one per node; structural wins
    std::uint64_t steps = 0;
};

NodePrune prune_root(const PruneContext& ctx) {
    NodePrune r{StateBitset(static_cast<std::uint32_t>(ctx.cover.num_states())), std::nullopt, 1};
    // The target root is below no anchor, so the only role it can play is
    // anchoring an occurrence itself.
    if (!ctx.availability.sets[ctx.target.root()].test(ctx.anchor_role)) {
        r.failure = FailureKind::RootRoleUnavailable;
        return r;
    }
    r.roles.set(ctx.anchor_role);
    if (ctx.target.is_final(ctx.target.root())) {
        r.steps += 1;
        if (!r.roles.intersects(ctx.cover_finals)) r.failure = FailureKind::FinalMismatch;
    }
    return r;
}

NodePrune prune_child(const PruneContext& ctx, const StateBitset& parent_roles, SymbolId symbol,
                      StateId child) {
    NodePrune r{StateBitset(static_cast<std::uint32_t>(ctx.cover.num_states())), std::nullopt, 1};
    // Continue every parent role across the edge. Availability of the
    // parent role guarantees the continued role fits below the child, so
    // no availability re-check is needed here.
    bool continued = false;
    parent_roles.for_each_set([&](std::uint32_t p) {
        r.steps += 1;
        if (auto q = ctx.cover.child(p, symbol)) {
            r.roles.set(*q);
            continued = true;
        }
    });
    if (ctx.mode == CoverMode::EdgeCoverage && !continued) {
        r.failure = FailureKind::UncoveredEdge;
        return r;
    }
    r.steps += 1;
    if (ctx.availability.sets[child].test(ctx.anchor_role)) r.roles.set(ctx.anchor_role);
    if (r.roles.none()) {
        r.failure = FailureKind::EmptyRoleSet;
        return r;
    }
    if (ctx.target.is_final(child)) {
        r.steps += 1;
        if (!r.roles.intersects(ctx.cover_finals)) r.failure = FailureKind::FinalMismatch;
    }
    return r;
}

// Runs fn over every node of one level. The parallel flavor relies on
// each invocation writing only its own slots.
template <typename F>
void for_level(const std::vector<StateId>& level, bool parallel, F&& fn) {
#if defined(COVERTRIE_PARALLEL)
    if (parallel) {
        std::for_each(std::execution::par, level.begin(), level.end(), fn);
        return;
    }
#else
    (void)parallel;
#endif
    std::for_each(level.begin(), level.end(), fn);
}

AvailabilityMap availability_engine(const Dta& cover, const Dta& target, const TreeIndex& index,
                                    bool parallel, CoverStats* stats) {
    AvailabilityMap map;
    map.sets.assign(target.num_states(),
                    StateBitset(static_cast<std::uint32_t>(cover.num_states())));
    std::vector<std::uint64_t> step_slot(target.num_states(), 0);

    for (std::size_t d = index.levels.size(); d-- > 0;) {
        const std::vector<StateId>& level = index.levels[d];
        for_level(level, parallel, [&](StateId v) {
            step_slot[v] = availability_at(cover, target, v, map.sets, map.sets[v]);
        });
        if (stats) {
            std::uint64_t wave = 0;
            for (StateId v : level) {
                wave += step_slot[v];
                stats->messages += target.children(v).size();
            }
            stats->basic_steps += wave;
            stats->round_steps.push_back(wave);
            stats->parallel_rounds += 1;
        }
    }
    return map;
}

std::variant<PrunedMap, CoverFailure> pruning_engine(const Dta& cover, const Dta& target,
                                                     const TreeIndex& index,
                                                     const AvailabilityMap& availability,
                                                     CoverMode mode, bool parallel,
                                                     CoverStats* stats) {
    PruneContext ctx(cover, target, availability, mode);
    PrunedMap pruned;
    pruned.sets.assign(target.num_states(),
                       StateBitset(static_cast<std::uint32_t>(cover.num_states())));
    std::vector<std::optional<FailureKind>> fail_slot(target.num_states());
    std::vector<std::uint64_t> step_slot(target.num_states(), 0);

    // Wave 0 handles the root; wave d then derives level d from level d-1.
    NodePrune root = prune_root(ctx);
    pruned.sets[target.root()] = std::move(root.roles);
    if (stats) {
        stats->basic_steps += root.steps;
        stats->round_steps.push_back(root.steps);
        stats->parallel_rounds += 1;
    }
    if (root.failure) return CoverFailure{*root.failure, target.root()};

    for (std::size_t d = 0; d + 1 < index.levels.size(); ++d) {
        const std::vector<StateId>& parents = index.levels[d];
        for_level(parents, parallel, [&](StateId v) {
            std::uint64_t steps = 0;
            for (const Transition& t : target.children(v)) {
                NodePrune r = prune_child(ctx, pruned.sets[v], t.symbol, t.to);
                pruned.sets[t.to] = std::move(r.roles);
                fail_slot[t.to] = r.failure;
                steps += r.steps;
            }
            step_slot[v] = steps;
        });

        const std::vector<StateId>& children = index.levels[d + 1];
        if (stats) {
            std::uint64_t wave = 0;
            for (StateId v : parents) wave += step_slot[v];
            stats->basic_steps += wave;
            stats->round_steps.push_back(wave);
            stats->parallel_rounds += 1;
            stats->messages += children.size();
        }
        // Canonical failure: the smallest failing node of the wave; its
        // slot already prefers the structural kind over FinalMismatch.
        for (StateId c : children) {
            if (fail_slot[c]) return CoverFailure{*fail_slot[c], c};
        }
    }
    return pruned;
}

CoverOutcome run_cover(const Dta& cover, const Dta& target, CoverMode mode, bool parallel) {
    check_inputs(cover, target);
    CoverOutcome outcome;
    outcome.mode = mode;
    TreeIndex index(target);
    outcome.availability =
        availability_engine(cover, target, index, parallel, &outcome.stats);
    auto result = pruning_engine(cover, target, index, outcome.availability, mode, parallel,
                                 &outcome.stats);
    if (std::holds_alternative<CoverFailure>(result)) {
        outcome.covered = false;
        outcome.failure = std::get<CoverFailure>(result);
        return outcome;
    }
    outcome.covered = true;
    outcome.pruned = std::get<PrunedMap>(std::move(result));
    outcome.witness = extract_occurrences(cover, target, *outcome.pruned);
    return outcome;
}

}  // namespace

const char* failure_kind_name(FailureKind kind) {
    switch (kind) {
        case FailureKind::RootRoleUnavailable: return "RootRoleUnavailable";
        case FailureKind::EmptyRoleSet: return "EmptyRoleSet";
        case FailureKind::UncoveredEdge: return "UncoveredEdge";
        case FailureKind::FinalMismatch: return "FinalMismatch";
    }
    return "Unknown";
}

AvailabilityMap availability_pass(const Dta& cover, const Dta& target, CoverStats* stats) {
    check_inputs(cover, target);
    TreeIndex index(target);
    return availability_engine(cover, target, index, /*parallel=*/false, stats);
}

std::variant<PrunedMap, CoverFailure> pruning_pass(const Dta& cover, const Dta& target,
                                                   const AvailabilityMap& availability,
                                                   CoverMode mode, CoverStats* stats) {
    check_inputs(cover, target);
    TreeIndex index(target);
    return pruning_engine(cover, target, index, availability, mode, /*parallel=*/false, stats);
}

CoverOutcome covers(const Dta& cover, const Dta& target, CoverMode mode) {
    return run_cover(cover, target, mode, /*parallel=*/false);
}

CoverOutcome covers_parallel(const Dta& cover, const Dta& target, CoverMode mode) {
    return run_cover(cover, target, mode, /*parallel=*/true);
}

OccurrenceSet extract_occurrences(const Dta& cover, const Dta& target, const PrunedMap& pruned) {
    if (pruned.sets.size() != target.num_states()) {
        throw std::invalid_argument("pruned map does not match the target automaton");
    }
    OccurrenceSet out;
    for (StateId v = 0; v < target.num_states(); ++v) {
        if (pruned.sets[v].test(cover.root())) out.anchors.push_back(v);
    }
    return out;
}

std::optional<Embedding> expand_occurrence(const Dta& cover, const Dta& target, StateId anchor) {
    if (anchor >= target.num_states()) return std::nullopt;
    Embedding phi(cover.num_states(), kNoState);
    phi[cover.root()] = anchor;
    std::vector<StateId> stack = {cover.root()};
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (const Transition& t : cover.children(q)) {
            auto c = target.child(phi[q], t.symbol);
            if (!c) return std::nullopt;
            phi[t.to] = *c;
            stack.push_back(t.to);
        }
    }
    return phi;
}

VerifyResult verify_witness(const Dta& cover, const Dta& target, const OccurrenceSet& witness,
                            CoverMode mode) {
    VerifyResult result;
    auto complain = [&](std::string reason) {
        result.ok = false;
        result.reasons.push_back(std::move(reason));
    };
    if (cover.alphabet() != target.alphabet()) {
        complain("cover and target automata use different alphabets");
        return result;
    }
    if (std::adjacent_find(witness.anchors.begin(), witness.anchors.end(),
                           std::greater_equal<StateId>()) != witness.anchors.end()) {
        complain("anchors are not strictly increasing");
    }

    const std::size_t n = target.num_states();
    std::vector<std::uint8_t> node_hit(n, 0), edge_hit(n, 0), final_hit(n, 0);
    for (StateId anchor : witness.anchors) {
        if (anchor >= n) {
            complain("anchor " + std::to_string(anchor) + " is not a target node");
            continue;
        }
        auto phi = expand_occurrence(cover, target, anchor);
        if (!phi) {
            complain("anchor " + std::to_string(anchor) + " does not admit a total embedding");
            continue;
        }
        for (StateId q = 0; q < cover.num_states(); ++q) {
            node_hit[(*phi)[q]] = 1;
            if (cover.is_final(q)) final_hit[(*phi)[q]] = 1;
            for (const Transition& t : cover.children(q)) edge_hit[(*phi)[t.to]] = 1;
        }
    }

    for (StateId v = 0; v < n; ++v) {
        if (!node_hit[v]) complain("target node " + std::to_string(v) + " is not covered");
    }
    if (mode == CoverMode::EdgeCoverage) {
        for (StateId v = 0; v < n; ++v) {
            if (v != target.root() && !edge_hit[v]) {
                complain("target edge into node " + std::to_string(v) + " is not traversed");
            }
        }
    }
    for (StateId v : target.finals()) {
        if (!final_hit[v]) {
            complain("final target node " + std::to_string(v) +
                     " is not the image of a final cover state");
        }
    }
    return result;
}

}  // namespace covertrie
