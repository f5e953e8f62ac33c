#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rooms/core.hpp"

// Permutations of a finite set of integer labels (room or person labels),
// plus the derangement-factorization toolbox used by the route planner:
// every permutation of n != 3 objects is a product of at most four
// derangements, with at most two sufficing for even permutations.

namespace rooms {

class Perm {
 public:
  Perm() = default;
  // domain need not be sorted; images[i] must be the image of domain[i].
  static Perm from_images(std::vector<int> domain, std::vector<int> images);
  // Image list on [n]: "2,1,4,3" style, so images[i] is the image of i+1.
  static Perm from_image_list(const std::vector<int>& images);
  static Perm identity(std::vector<int> domain);
  // Cycle (c0 c1 ... ck-1) on the given domain, fixing everything else.
  static Perm from_cycle(const std::vector<int>& cycle,
                         std::vector<int> domain);

  int apply(int x) const;
  const std::vector<int>& domain() const { return dom_; }   // sorted
  const std::vector<int>& images() const { return img_; }   // img_[i] = p(dom_[i])
  int size() const { return static_cast<int>(dom_.size()); }
  bool is_identity() const;

  // Domain partitioned into cycles; each cycle starts at its smallest
  // element, cycles ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Perm& o) const = default;

 private:
  std::vector<int> dom_;
  std::vector<int> img_;
};

// (p o q)(x) = p(q(x)); q is applied first.  DomainError unless the domains
// coincide.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

enum class Parity { Even, Odd };
Parity parity(const Perm& p);

// No fixed points.
bool is_derangement(const Perm& p);
// One cycle covering the whole domain (size >= 2).
bool is_full_cycle(const Perm& p);

// Canonical derangement of the domain: the cyclic rotation of the sorted
// domain, shifted so that pin.first maps to pin.second when a pin is given.
// DomainError when |domain| < 2 or the pin is not satisfiable.
Perm make_derangement(std::vector<int> domain,
                      std::optional<std::pair<int, int>> pin = std::nullopt);

// Writes an even p on [n], n >= 2, as compose(c1, c2) with both factors
// full n-cycles (hence derangements).  Seeded search certified by
// composition, exhaustive for small n.  DomainError on odd p or n < 2.
std::pair<Perm, Perm> even_to_two_ncycles(const Perm& p);

// The transposition (x y) on [n], n >= 4, as compose(first, second) with
// both factors derangements (the second is applied first).  DomainError
// for n <= 3.
std::pair<Perm, Perm> transposition_to_two_derangements(int x, int y, int n);

struct DerangementFactorization {
  // target = factors[0] o factors[1] o ... o factors[k-1]; the last factor
  // is applied first.  Empty iff target is the identity.
  std::vector<Perm> factors;
};

// At most four factors for any p on [n] with n != 3; at most two when p is
// even; one when p is already a derangement.  NotFactorableError for odd
// permutations of exactly three objects.
DerangementFactorization factor_into_derangements(const Perm& p);

Perm compose_all(const DerangementFactorization& f, int n);

// Image-list text form on [n], e.g. "2,1,4,3".
Perm parse_perm(const std::string& text);
std::string format_perm(const Perm& p);

}  // namespace rooms
