#pragma once

#include "rtex/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rtex {

/// Result of a canonical labelling search.
struct Labeling {
    /// order[p] is the vertex placed at canonical position p.
    std::vector<int> order;
    /// Orbit representative of each vertex under the automorphisms found by
    /// the search. Vertices sharing a representative are certainly in one
    /// orbit; the converse holds whenever the found generators span the full
    /// group, which is not guaranteed.
    std::vector<int> orbit;
    std::size_t automorphisms_found = 0;
};

/// Canonical labelling by equitable refinement plus individualisation
/// backtracking with automorphism pruning. `colours` (optional) is an
/// initial vertex colouring; isomorphisms must preserve colour values.
Labeling canonical_labeling(const Graph& g, std::span<const std::int64_t> colours = {});

/// Equitable refinement of the colour partition, cells in canonical order.
std::vector<std::vector<int>> equitable_partition(const Graph& g,
                                                  std::span<const std::int64_t> colours = {});

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
/// Twins are collapsed first, so blow-ups are handled on their quotient.
std::string canonical_form(const Graph& g);

/// Canonical form of the blow-up of `base` by `weights` (weights >= 0),
/// computed without materialising it. Equal to canonical_form(blow-up).
std::string weighted_canonical_form(const Graph& base, std::span<const std::int64_t> weights);

/// Canonical form of a vertex-coloured graph (colour values are part of the
/// form; no twin collapsing).
std::string coloured_canonical_form(const Graph& g, std::span<const std::int64_t> colours);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace rtex
