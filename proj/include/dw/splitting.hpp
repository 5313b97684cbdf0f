#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dw/poly.hpp"

namespace dw {

struct Root {
  Elem value;
  std::size_t multiplicity = 1;
};

// Roots lying in the coefficient field of g, sorted by encoding.
std::vector<Root> roots_in_field(const PolyF& g);

PolyF embed_poly(const PolyF& a, const FieldEmbedding& emb);

// Degrees of the distinct irreducible factors of h over its coefficient field.
std::vector<std::size_t> factor_degrees(const PolyF& h);

struct SplittingField {
  FieldPtr field;        // F_{Q^s}, Q = |coefficient field of h|
  FieldEmbedding emb;    // coefficient field -> field
  std::uint32_t s = 1;
  std::vector<Root> roots;
};

// Smallest extension Q^s (s <= cap) over which h splits.
SplittingField splitting_field(const PolyF& h, std::uint32_t cap = 12);

}  // namespace dw
