#ifndef HVECTOR_LATTICE_HPP
#define HVECTOR_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hvector/expr.hpp"
#include "hvector/flag.hpp"

namespace hvector {

struct LatticeLimits {
  std::size_t max_faces = 1'000'000;
  // Chain counting keeps every strict-containment pair in memory.
  std::size_t max_chain_faces = 50'000;
  std::uint64_t max_order_pairs = 20'000'000;
};

// Face lattice of a polytope: graded, with bottom (the empty face, dim -1)
// and top (the polytope).  Faces are identified by index; labels record
// how each face was constructed and are unique within a lattice.
class FaceLattice {
 public:
  struct Face {
    int dim = 0;
    std::string label;
    std::vector<std::size_t> down;  // faces covered by this one
    std::vector<std::size_t> up;    // faces covering this one
  };

  // Validates gradedness of the covers and the bottom/top elements.
  FaceLattice(std::vector<Face> faces, std::size_t bottom, std::size_t top);

  int dim() const { return faces_[top_].dim; }
  std::size_t size() const { return faces_.size(); }
  const Face& face(std::size_t i) const { return faces_.at(i); }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  // Number of faces of each dimension 0..dim (bottom excluded).
  std::vector<std::size_t> face_counts() const;

 private:
  std::vector<Face> faces_;
  std::size_t bottom_;
  std::size_t top_;
};

FaceLattice build_lattice(const Expr& e, const LatticeLimits& limits = {});

// f_S = number of chains of proper nonempty faces with dimension set S.
FlagVector chain_count_flag(const FaceLattice& lattice, const LatticeLimits& limits = {});

// Flag vector of the link of a nonempty face: the interval strictly
// between the face and the top, with dimensions lowered by dim(face) + 1.
// The link of the top face is the empty polytope.
FlagVector link_flag(const FaceLattice& lattice, std::size_t face,
                     const LatticeLimits& limits = {});

// link_flag for every face, indexed like the lattice.  The entry for the
// bottom face is the flag vector of the whole polytope.
std::vector<FlagVector> all_link_flags(const FaceLattice& lattice,
                                       const LatticeLimits& limits = {});

// Sum of link flag vectors over all nonempty faces, graded by link
// dimension.  The top face contributes f(empty) at grade -1.
GradedFlagVector total_link_vector(const FaceLattice& lattice, const LatticeLimits& limits = {});

// Every interval of rank >= 1 has as many even- as odd-dimensional faces.
bool is_eulerian(const FaceLattice& lattice, const LatticeLimits& limits = {});

// Flag vector of any expression.  Concrete subexpressions are chain
// counted on their lattice; D and anything above it go through the
// flag-level operators.  A product with a virtual factor is a DomainError.
FlagVector evaluate_flag(const Expr& e, const LatticeLimits& limits = {});

}  // namespace hvector

#endif  // HVECTOR_LATTICE_HPP
