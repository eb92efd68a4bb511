#include "chiralkit/zigzag.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::zigzag {

using geometry::Point;
using maps1d::chart_onto;
using maps1d::compose_line;
using maps1d::invert_on_image;
using maps1d::LineEmbedding;
using skelcat::MtoCyl;
using skelcat::MtoM;

std::vector<std::pair<std::string, const SkelMorphism2*>> ZigZag::morphisms() const {
  return {{"(id,k)", &k},
          {"[h,f-k]", &left_diag},
          {"(id,k~)", &ktilde},
          {"[h,f'-k']", &right_diag},
          {"(id,k')", &kprime}};
}

ZigZag build_zigzag(const BoundedLineEmbedding& h, const BoundedLineEmbedding& fminus,
                    const BoundedLineEmbedding& fminus2) {
  // h has image width <= 1, so no nonzero translate can make the two images meet.
  const auto overlap = fminus.image().intersect(fminus2.image());
  if (!overlap) {
    throw EmptyIntersection("images " + fminus.image().str() + " and " + fminus2.image().str() +
                            " do not meet");
  }
  const LineEmbedding& f = fminus.base();
  const LineEmbedding& f2 = fminus2.base();
  const LineEmbedding id = LineEmbedding::identity();
  const LineEmbedding k = chart_onto(invert_on_image(f).image_of(*overlap));
  const LineEmbedding k2 = chart_onto(invert_on_image(f2).image_of(*overlap));
  const LineEmbedding fk = compose_line(f, k);
  const LineEmbedding f2k2 = compose_line(f2, k2);
  const LineEmbedding ktilde = compose_line(invert_on_image(f2k2), fk);
  return ZigZag{skelcat::make_mto_cyl(h.base(), f),
                skelcat::make_mto_cyl(h.base(), f2),
                *overlap,
                MtoM{id, k},
                skelcat::make_mto_cyl(h.base(), fk),
                MtoM{id, ktilde},
                skelcat::make_mto_cyl(h.base(), f2k2),
                MtoM{id, k2}};
}

bool same_cylinder_point(const Point& a, const Point& b) {
  const Rational n = a.plus - b.plus;
  return n.get_den() == 1 && b.minus - a.minus == n;
}

namespace {

Point apply2(const SkelMorphism2& m, const Point& p) {
  if (const auto* f = std::get_if<MtoM>(&m)) return {f->plus(p.plus), f->minus(p.minus)};
  const auto& g = std::get<MtoCyl>(m);
  return {g.plus.base()(p.plus), g.minus.base()(p.minus)};
}

CellReport triangle(const std::string& name, const SkelMorphism2& leg, const SkelMorphism2& over,
                    const SkelMorphism2& diag, int grid_points) {
  CellReport r{name};
  r.structural = skelcat::compose2(over, leg) == diag;
  r.pointwise = true;
  for (int i = 0; i < grid_points && r.pointwise; ++i) {
    const Point p{Rational(-4) + ratio(8L * i, grid_points - 1 > 0 ? grid_points - 1 : 1),
                  Rational(4) - ratio(8L * ((7L * i) % grid_points), grid_points)};
    r.pointwise = same_cylinder_point(apply2(over, apply2(leg, p)), apply2(diag, p));
  }
  return r;
}

}  // namespace

std::vector<CellReport> check_zigzag(const ZigZag& z, int grid_points) {
  return {triangle("left: [h,f-] o (id,k) = [h,f-k]", z.k, z.outer_left, z.left_diag, grid_points),
          triangle("middle: [h,f'-k'] o (id,k~) = [h,f-k]", z.ktilde, z.right_diag, z.left_diag, grid_points),
          triangle("right: [h,f'-] o (id,k') = [h,f'-k']", z.kprime, z.outer_right, z.right_diag, grid_points)};
}

bool commutes(const std::vector<CellReport>& cells) {
  for (const auto& c : cells) {
    if (!c.structural || !c.pointwise) return false;
  }
  return true;
}

std::vector<ZigZag> connect_chain(const BoundedLineEmbedding& h, const BoundedLineEmbedding& fminus,
                                  const BoundedLineEmbedding& fminus2) {
  const Interval target = fminus2.image();
  const Interval start = fminus.image();
  const Rational step = start.length() / 2;
  const int dir = start.midpoint() < target.midpoint() ? 1 : -1;
  std::vector<ZigZag> chain;
  BoundedLineEmbedding current = fminus;
  while (!current.image().meets(target)) {
    BoundedLineEmbedding next(maps1d::translate(current.base(), dir * step));
    chain.push_back(build_zigzag(h, current, next));
    current = std::move(next);
  }
  chain.push_back(build_zigzag(h, current, fminus2));
  return chain;
}

}  // namespace chiralkit::zigzag
