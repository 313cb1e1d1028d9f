#include "hvector/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "hvector/checked.hpp"
#include "hvector/error.hpp"

namespace hvector {

FaceLattice::FaceLattice(std::vector<Face> faces, std::size_t bottom, std::size_t top)
    : faces_(std::move(faces)), bottom_(bottom), top_(top) {
  if (bottom_ >= faces_.size() || top_ >= faces_.size()) {
    throw DomainError("lattice bottom/top index out of range");
  }
  if (faces_[bottom_].dim != -1) throw DomainError("lattice bottom must have dim -1");
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    if (i != bottom_ && f.down.empty()) throw DomainError("face " + f.label + " has no lower cover");
    if (i != top_ && f.up.empty()) throw DomainError("face " + f.label + " has no upper cover");
    for (std::size_t j : f.up) {
      if (j >= faces_.size() || faces_[j].dim != f.dim + 1) {
        throw DomainError("cover relation above " + f.label + " is not graded");
      }
    }
  }
}

std::vector<std::size_t> FaceLattice::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 1), 0);
  for (const Face& f : faces_) {
    if (f.dim >= 0) ++counts[static_cast<std::size_t>(f.dim)];
  }
  return counts;
}

namespace {

using Face = FaceLattice::Face;

void check_face_cap(std::size_t n, const LatticeLimits& limits) {
  if (n > limits.max_faces) {
    throw ResourceError("face lattice would have " + std::to_string(n) + " faces (cap " +
                        std::to_string(limits.max_faces) + ")");
  }
}

void link(std::vector<Face>& faces, std::size_t lower, std::size_t upper) {
  faces[lower].up.push_back(upper);
  faces[upper].down.push_back(lower);
}

FaceLattice point_lattice() {
  std::vector<Face> faces(2);
  faces[0].dim = -1;
  faces[0].label = "()";
  faces[1].dim = 0;
  faces[1].label = "p";
  link(faces, 0, 1);
  return FaceLattice(std::move(faces), 0, 1);
}

// Faces F and C[F] for every face F; F < C[F] and the old top becomes a
// facet.  C[()] is the apex.
FaceLattice cone_lattice(const FaceLattice& base, const LatticeLimits& limits) {
  const std::size_t n = base.size();
  check_face_cap(2 * n, limits);
  std::vector<Face> faces(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Face& f = base.face(i);
    faces[i].dim = f.dim;
    faces[i].label = f.label;
    faces[n + i].dim = f.dim + 1;
    faces[n + i].label = "C[" + f.label + "]";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : base.face(i).up) {
      link(faces, i, j);
      link(faces, n + i, n + j);
    }
    link(faces, i, n + i);
  }
  return FaceLattice(std::move(faces), base.bottom(), n + base.top());
}

// Nonempty faces are pairs of nonempty faces; one empty face below all
// pairs of vertices.
FaceLattice product_lattice(const FaceLattice& a, const FaceLattice& b,
                            const LatticeLimits& limits) {
  const std::size_t na = a.size() - 1;
  const std::size_t nb = b.size() - 1;
  if (na != 0 && nb > limits.max_faces / na) check_face_cap(limits.max_faces + 1, limits);
  check_face_cap(na * nb + 1, limits);

  // Compact indices for nonempty faces.
  auto compact = [](const FaceLattice& l) {
    std::vector<std::size_t> idx(l.size(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i != l.bottom()) idx[i] = next++;
    }
    return idx;
  };
  const auto ia = compact(a);
  const auto ib = compact(b);
  auto pair_index = [&](std::size_t i, std::size_t j) { return 1 + ia[i] * nb + ib[j]; };

  std::vector<Face> faces(na * nb + 1);
  faces[0].dim = -1;
  faces[0].label = "()";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == a.bottom()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j == b.bottom()) continue;
      Face& f = faces[pair_index(i, j)];
      f.dim = a.face(i).dim + b.face(j).dim;
      f.label = "(" + a.face(i).label + "," + b.face(j).label + ")";
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == a.bottom()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j == b.bottom()) continue;
      const std::size_t here = pair_index(i, j);
      if (a.face(i).dim == 0 && b.face(j).dim == 0) link(faces, 0, here);
      for (std::size_t i2 : a.face(i).up) link(faces, here, pair_index(i2, j));
      for (std::size_t j2 : b.face(j).up) link(faces, here, pair_index(i, j2));
    }
  }
  return FaceLattice(std::move(faces), 0, pair_index(a.top(), b.top()));
}

FaceLattice dual_lattice(const FaceLattice& base) {
  const int d = base.dim();
  std::vector<Face> faces(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Face& f = base.face(i);
    faces[i].dim = d - 1 - f.dim;
    faces[i].label = "~" + f.label;
    faces[i].down = f.up;
    faces[i].up = f.down;
  }
  return FaceLattice(std::move(faces), base.top(), base.bottom());
}

FaceLattice segment_lattice(const LatticeLimits& limits) {
  return cone_lattice(point_lattice(), limits);
}

}  // namespace

FaceLattice build_lattice(const Expr& e, const LatticeLimits& limits) {
  switch (e.kind()) {
    case ExprKind::Point:
      return point_lattice();
    case ExprKind::Cone:
      return cone_lattice(build_lattice(e.child(), limits), limits);
    case ExprKind::Prism:
      return product_lattice(build_lattice(e.child(), limits), segment_lattice(limits), limits);
    case ExprKind::Bipyramid: {
      const FaceLattice dual_base = dual_lattice(build_lattice(e.child(), limits));
      return dual_lattice(product_lattice(dual_base, segment_lattice(limits), limits));
    }
    case ExprKind::Dual:
      return dual_lattice(build_lattice(e.child(), limits));
    case ExprKind::Product:
      return product_lattice(build_lattice(e.child(0), limits), build_lattice(e.child(1), limits),
                             limits);
    case ExprKind::Simplex: {
      FaceLattice l = point_lattice();
      for (int i = 0; i < e.size_arg(); ++i) l = cone_lattice(l, limits);
      return l;
    }
    case ExprKind::Cube: {
      const FaceLattice seg = segment_lattice(limits);
      FaceLattice l = seg;
      for (int i = 1; i < e.size_arg(); ++i) l = product_lattice(l, seg, limits);
      return l;
    }
    case ExprKind::CrossPolytope:
      return dual_lattice(build_lattice(Expr::cube(e.size_arg()), limits));
    case ExprKind::DOperator:
      break;
  }
  throw DomainError("expression " + e.to_string() + " is virtual and has no face lattice");
}

namespace {

// Faces strictly above each face, excluding the top.
std::vector<std::vector<std::uint32_t>> strict_upper_sets(const FaceLattice& lattice,
                                                          const LatticeLimits& limits) {
  if (lattice.size() > limits.max_chain_faces) {
    throw ResourceError("chain counting capped at " + std::to_string(limits.max_chain_faces) +
                        " faces, lattice has " + std::to_string(lattice.size()));
  }
  const std::size_t n = lattice.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.face(a).dim > lattice.face(b).dim;
  });

  std::vector<std::vector<std::uint32_t>> above(n);
  std::vector<std::size_t> seen(n, n);
  std::uint64_t pairs = 0;
  for (std::size_t g : order) {
    auto& out = above[g];
    auto visit = [&](std::size_t h) {
      if (h == lattice.top() || seen[h] == g) return;
      seen[h] = g;
      out.push_back(static_cast<std::uint32_t>(h));
    };
    for (std::size_t h : lattice.face(g).up) {
      visit(h);
      for (std::uint32_t k : above[h]) visit(k);
    }
    pairs += out.size();
    if (pairs > limits.max_order_pairs) {
      throw ResourceError("chain counting exceeds " + std::to_string(limits.max_order_pairs) +
                          " containment pairs");
    }
  }
  return above;
}

// For each face G, table[G][m] counts chains of faces strictly between G
// and the top whose dimensions, lowered by dim(G) + 1, form the set m.
std::vector<std::vector<std::int64_t>> upper_chain_tables(const FaceLattice& lattice,
                                                          const LatticeLimits& limits) {
  const int d = lattice.dim();
  if (d > kMaxFlagDim) throw DomainError("lattice dimension too large for flag vectors");
  const auto above = strict_upper_sets(lattice, limits);
  const std::size_t n = lattice.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.face(a).dim > lattice.face(b).dim;
  });

  std::vector<std::vector<std::int64_t>> table(n);
  for (std::size_t g : order) {
    const int dg = lattice.face(g).dim;
    const int link_dim = d - dg - 1;
    auto& t = table[g];
    t.assign(std::size_t{1} << std::max(link_dim, 0), 0);
    t[0] = 1;
    for (std::uint32_t h : above[g]) {
      const int dh = lattice.face(h).dim;
      const int shift = dh - dg;
      const std::uint64_t own = std::uint64_t{1} << (dh - dg - 1);
      const auto& th = table[h];
      for (std::size_t m = 0; m < th.size(); ++m) {
        if (th[m] == 0) continue;
        auto& slot = t[(static_cast<std::uint64_t>(m) << shift) | own];
        slot = checked_add(slot, th[m]);
      }
    }
  }
  return table;
}

FlagVector table_to_flag(const std::vector<std::int64_t>& t, int dim) {
  FlagVector::Entries entries;
  for (std::size_t m = 0; m < t.size(); ++m) {
    if (t[m] != 0) entries.emplace(DimSet::from_mask(m), t[m]);
  }
  return FlagVector(dim, std::move(entries));
}

}  // namespace

std::vector<FlagVector> all_link_flags(const FaceLattice& lattice, const LatticeLimits& limits) {
  const auto table = upper_chain_tables(lattice, limits);
  std::vector<FlagVector> out;
  out.reserve(lattice.size());
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    out.push_back(table_to_flag(table[g], lattice.dim() - lattice.face(g).dim - 1));
  }
  return out;
}

FlagVector chain_count_flag(const FaceLattice& lattice, const LatticeLimits& limits) {
  return all_link_flags(lattice, limits)[lattice.bottom()];
}

FlagVector link_flag(const FaceLattice& lattice, std::size_t face, const LatticeLimits& limits) {
  if (face >= lattice.size()) throw DomainError("face index out of range");
  if (face == lattice.bottom()) throw DomainError("the empty face has no link");
  return all_link_flags(lattice, limits)[face];
}

GradedFlagVector total_link_vector(const FaceLattice& lattice, const LatticeLimits& limits) {
  const auto links = all_link_flags(lattice, limits);
  GradedFlagVector out;
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    if (g != lattice.bottom()) out.add(links[g]);
  }
  return out;
}

bool is_eulerian(const FaceLattice& lattice, const LatticeLimits& limits) {
  auto above = strict_upper_sets(lattice, limits);
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    if (g != lattice.top()) above[g].push_back(static_cast<std::uint32_t>(lattice.top()));
  }
  const std::size_t n = lattice.size();
  std::vector<std::int64_t> sum(n, 0);
  auto sign = [&](std::size_t z) { return lattice.face(z).dim % 2 == 0 ? 1 : -1; };
  for (std::size_t a = 0; a < n; ++a) {
    // sum[b] = signed count of z with a <= z <= b.
    for (std::uint32_t b : above[a]) sum[b] = sign(a) + sign(b);
    for (std::uint32_t z : above[a]) {
      for (std::uint32_t b : above[z]) sum[b] += sign(z);
    }
    for (std::uint32_t b : above[a]) {
      if (sum[b] != 0) return false;
    }
  }
  return true;
}

FlagVector evaluate_flag(const Expr& e, const LatticeLimits& limits) {
  if (!e.is_virtual()) return chain_count_flag(build_lattice(e, limits), limits);
  switch (e.kind()) {
    case ExprKind::Cone: return pyramid_flag(evaluate_flag(e.child(), limits));
    case ExprKind::Prism: return prism_flag(evaluate_flag(e.child(), limits));
    case ExprKind::Bipyramid:
      return dual_flag(prism_flag(dual_flag(evaluate_flag(e.child(), limits))));
    case ExprKind::Dual: return dual_flag(evaluate_flag(e.child(), limits));
    case ExprKind::DOperator: return d_flag(evaluate_flag(e.child(), limits));
    default: break;
  }
  throw DomainError("no flag-level formula for " + e.to_string());
}

}  // namespace hvector
