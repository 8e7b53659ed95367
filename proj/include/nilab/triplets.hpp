#pragma once

#include "nilab/algebra.hpp"

#include <string>
#include <vector>

namespace nilab {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  unsigned size() const;
  std::string to_string() const;  // "3,2,2"
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Parses "3,2,2"; parts are sorted into weakly decreasing order. Throws
/// partition_error on malformed input.
Partition parse_partition(const std::string& text);

/// Every partition of n, largest first in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

/// Family constraint: so needs even parts with even multiplicity, sp odd parts.
bool valid_for(Family family, const Partition& p);

/// All partitions labelling nilpotent orbits of the algebra, zero orbit last.
std::vector<Partition> nilpotent_partitions(const Algebra& g);

/// Jordan type of a nilpotent matrix.
Partition jordan_type(const Mat& nilpotent);

struct Triplet {
  Element h, e, f;
};

/// Throws identity_error unless [h,e] = 2e, [h,f] = -2f and [e,f] = h.
void verify_triplet(const Triplet& t);

/// sl: sum of Jordan blocks along the diagonal. so/sp: a generic element of the
/// ad(h) eigenspace of eigenvalue 2, where h is the diagonal characteristic of
/// the partition; the Jordan type is checked before returning.
Element nilpotent_from_partition(const Algebra& g, const Partition& p);

/// Completes e to an sl(2)-triplet. Jordan-form nilpotents of sl(N) get the
/// closed-form block triplet; anything else goes through the linear-algebra
/// Jacobson-Morozov construction.
Triplet sl2_complete(const Algebra& g, const Element& e);

/// Triplet for the orbit of a partition, using the diagonal characteristic as h.
Triplet triplet_from_partition(const Algebra& g, const Partition& p);

Partition principal_partition(const Algebra& g);

/// Principal triplet; asserts dim z(e) equals the rank.
Triplet principal_triplet(const Algebra& g);

} // namespace nilab
