#pragma once

#include <string>
#include <vector>

#include "chiralkit/maps1d.hpp"
#include "chiralkit/skelcat.hpp"

// Connecting two objects [h, f-] and [h, f'-] of the comma category over the
// cylinder by zig-zags of (id, k) morphisms.
namespace chiralkit::zigzag {

using maps1d::BoundedLineEmbedding;
using maps1d::Interval;
using skelcat::SkelMorphism2;

struct ZigZag {
  SkelMorphism2 outer_left;   ///< [h, f-]
  SkelMorphism2 outer_right;  ///< [h, f'-]
  Interval overlap;           ///< f-(R) meet f'-(R)

  // The five morphisms of the diagram, left to right.
  SkelMorphism2 k;           ///< (id, k) : M -> M
  SkelMorphism2 left_diag;   ///< [h, f- k]
  SkelMorphism2 ktilde;      ///< (id, k~) : M -> M
  SkelMorphism2 right_diag;  ///< [h, f'- k']
  SkelMorphism2 kprime;      ///< (id, k') : M -> M

  std::vector<std::pair<std::string, const SkelMorphism2*>> morphisms() const;
};

/// Throws EmptyIntersection when f-(R) and f'-(R) are disjoint.
ZigZag build_zigzag(const BoundedLineEmbedding& h, const BoundedLineEmbedding& fminus,
                    const BoundedLineEmbedding& fminus2);

struct CellReport {
  std::string cell;
  bool structural = false;
  bool pointwise = false;
};

/// The three triangles of the diagram, each checked on canonical forms and on
/// `grid_points` sample points of M.
std::vector<CellReport> check_zigzag(const ZigZag& z, int grid_points = 50);
bool commutes(const std::vector<CellReport>& cells);

/// Neighbouring translates of f-, stepped by half its image length toward f'-,
/// each consecutive pair joined by a zig-zag.
std::vector<ZigZag> connect_chain(const BoundedLineEmbedding& h, const BoundedLineEmbedding& fminus,
                                  const BoundedLineEmbedding& fminus2);

/// Equality in the cylinder: the two points differ by (n, -n).
bool same_cylinder_point(const geometry::Point& a, const geometry::Point& b);

}  // namespace chiralkit::zigzag
