#include "rooms/perm.hpp"

#include <algorithm>
#include <numeric>

#include "rooms/rng.hpp"

namespace rooms {

namespace {

int index_of(const std::vector<int>& sorted, int x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x)
    throw DomainError("label " + std::to_string(x) + " not in domain");
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

Perm Perm::from_images(std::vector<int> domain, std::vector<int> images) {
  if (domain.size() != images.size())
    throw DomainError("domain and image lists differ in size");
  std::vector<std::size_t> order(domain.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  Perm p;
  for (std::size_t i : order) {
    p.dom_.push_back(domain[i]);
    p.img_.push_back(images[i]);
  }
  for (std::size_t i = 0; i + 1 < p.dom_.size(); ++i)
    if (p.dom_[i] == p.dom_[i + 1])
      throw DomainError("duplicate domain label " + std::to_string(p.dom_[i]));
  // The image multiset must equal the domain.
  std::vector<int> check = p.img_;
  std::sort(check.begin(), check.end());
  if (check != p.dom_)
    throw DomainError("images are not a permutation of the domain");
  return p;
}

Perm Perm::from_image_list(const std::vector<int>& images) {
  std::vector<int> domain(images.size());
  std::iota(domain.begin(), domain.end(), 1);
  return from_images(std::move(domain), images);
}

Perm Perm::identity(std::vector<int> domain) {
  std::vector<int> images = domain;
  return from_images(std::move(domain), std::move(images));
}

Perm Perm::from_cycle(const std::vector<int>& cycle, std::vector<int> domain) {
  Perm p = identity(std::move(domain));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int from = cycle[i];
    int to = cycle[(i + 1) % cycle.size()];
    p.img_[index_of(p.dom_, from)] = to;
  }
  std::vector<int> check = p.img_;
  std::sort(check.begin(), check.end());
  if (check != p.dom_) throw DomainError("cycle repeats a label");
  return p;
}

int Perm::apply(int x) const { return img_[index_of(dom_, x)]; }

bool Perm::is_identity() const { return dom_ == img_; }

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(dom_.size(), false);
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(dom_[j]);
      j = static_cast<std::size_t>(index_of(dom_, img_[j]));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.domain() != q.domain())
    throw DomainError("composing permutations of different domains");
  std::vector<int> images;
  images.reserve(q.domain().size());
  for (int img : q.images()) images.push_back(p.apply(img));
  return Perm::from_images(q.domain(), std::move(images));
}

Perm inverse(const Perm& p) {
  return Perm::from_images(p.images(), p.domain());
}

Parity parity(const Perm& p) {
  int transpositions = p.size() - static_cast<int>(p.cycles().size());
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool is_derangement(const Perm& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p.domain()[i] == p.images()[i]) return false;
  return true;
}

bool is_full_cycle(const Perm& p) {
  return p.size() >= 2 && p.cycles().size() == 1;
}

Perm make_derangement(std::vector<int> domain,
                      std::optional<std::pair<int, int>> pin) {
  std::sort(domain.begin(), domain.end());
  int n = static_cast<int>(domain.size());
  if (n < 2) throw DomainError("derangements need at least two labels");
  int shift = 1;
  if (pin) {
    int from = index_of(domain, pin->first);
    int to = index_of(domain, pin->second);
    shift = ((to - from) % n + n) % n;
    if (shift == 0) throw DomainError("pin must move its label");
  }
  std::vector<int> images(domain.size());
  for (int i = 0; i < n; ++i) images[i] = domain[(i + shift) % n];
  return Perm::from_images(std::move(domain), std::move(images));
}

namespace {

std::uint64_t perm_hash(const Perm& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  eat(static_cast<std::uint64_t>(p.size()));
  for (int img : p.images()) eat(static_cast<std::uint64_t>(img));
  return h;
}

Perm cycle_from_arrangement(const std::vector<int>& arrangement,
                            const std::vector<int>& domain) {
  return Perm::from_cycle(arrangement, domain);
}

}  // namespace

std::pair<Perm, Perm> even_to_two_ncycles(const Perm& p) {
  int n = p.size();
  if (n < 2) throw DomainError("need at least two labels for n-cycles");
  if (parity(p) != Parity::Even)
    throw DomainError("only even permutations split into two full cycles");
  const std::vector<int>& dom = p.domain();

  auto try_first = [&](const Perm& c1) -> std::optional<std::pair<Perm, Perm>> {
    Perm c2 = compose(inverse(c1), p);
    if (!is_full_cycle(c2)) return std::nullopt;
    if (!(compose(c1, c2) == p)) return std::nullopt;  // certify
    return std::make_pair(c1, c2);
  };

  // Seeded search: a uniformly drawn full cycle works with probability
  // roughly 1/n, so the retry budget is generous.
  SplitMix64 rng{perm_hash(p)};
  std::vector<int> arrangement = dom;
  for (int attempt = 0; attempt < 64 * n + 256; ++attempt) {
    for (std::size_t i = arrangement.size() - 1; i >= 1; --i) {
      std::size_t j = 1 + static_cast<std::size_t>(bounded(rng, i));
      std::swap(arrangement[i], arrangement[j]);
    }
    if (auto hit = try_first(cycle_from_arrangement(arrangement, dom)))
      return *hit;
  }
  if (n <= 6) {
    std::vector<int> rest(dom.begin() + 1, dom.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> arr{dom[0]};
      arr.insert(arr.end(), rest.begin(), rest.end());
      if (auto hit = try_first(cycle_from_arrangement(arr, dom))) return *hit;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  throw Error("full-cycle factor search failed");
}

namespace {

std::pair<Perm, Perm> transposition_factors(int x, int y,
                                            const std::vector<int>& domain) {
  if (domain.size() <= 3)
    throw DomainError("transposition splitting needs at least four labels");
  // Relabel the domain as a1..an with a1 = x, a3 = y, the rest ascending.
  // For sigma = (a1 a2 ... an) and tau = (a2 a4):
  //   (x y) = inverse(sigma) o tau o sigma,
  // and tau o sigma = (a1 a4 a5 ... an)(a2 a3) is a derangement, as is
  // inverse(sigma).
  std::vector<int> rest;
  for (int v : domain)
    if (v != x && v != y) rest.push_back(v);
  std::vector<int> a(domain.size());
  a[0] = x;
  a[2] = y;
  a[1] = rest[0];
  for (std::size_t i = 1; i < rest.size(); ++i) a[i + 2] = rest[i];
  Perm sigma = Perm::from_cycle(a, domain);
  Perm tau = Perm::from_cycle({a[1], a[3]}, domain);
  Perm d1 = compose(tau, sigma);
  Perm d2 = inverse(sigma);
  if (!is_derangement(d1) || !is_derangement(d2))
    throw Error("transposition splitting produced a fixed point");
  return {d1, d2};
}

}  // namespace

std::pair<Perm, Perm> transposition_to_two_derangements(int x, int y, int n) {
  if (x == y) throw DomainError("transposition needs two distinct labels");
  std::vector<int> domain(n);
  std::iota(domain.begin(), domain.end(), 1);
  index_of(domain, x);
  index_of(domain, y);
  auto [d1, d2] = transposition_factors(x, y, domain);
  return {d2, d1};  // compose(first, second) == (x y)
}

DerangementFactorization factor_into_derangements(const Perm& p) {
  if (p.is_identity()) return {};
  if (is_derangement(p)) return {{p}};
  if (parity(p) == Parity::Even) {
    auto [c1, c2] = even_to_two_ncycles(p);
    return {{c1, c2}};
  }
  if (p.size() == 3)
    throw NotFactorableError(
        "odd permutations of three objects have no derangement factors");
  // Odd and not a derangement forces n >= 4 here: split off a transposition
  // t, factor it as d2 o d1, and factor the even remainder p o t.
  const std::vector<int>& dom = p.domain();
  auto cycs = p.cycles();
  std::vector<std::vector<int>> nontrivial;
  for (auto& c : cycs)
    if (c.size() > 1) nontrivial.push_back(c);
  if (nontrivial.size() == 1 && nontrivial[0].size() == 2) {
    auto [d1, d2] =
        transposition_factors(nontrivial[0][0], nontrivial[0][1], dom);
    return {{d2, d1}};
  }
  Perm t = Perm::from_cycle({dom[0], dom[1]}, dom);
  auto [d1, d2] = transposition_factors(dom[0], dom[1], dom);
  Perm even_part = compose(p, t);
  if (is_derangement(even_part)) return {{even_part, d2, d1}};
  auto [c1, c2] = even_to_two_ncycles(even_part);
  return {{c1, c2, d2, d1}};
}

Perm compose_all(const DerangementFactorization& f, int n) {
  std::vector<int> domain(n);
  std::iota(domain.begin(), domain.end(), 1);
  Perm acc = Perm::identity(domain);
  for (const Perm& factor : f.factors) acc = compose(acc, factor);
  return acc;
}

Perm parse_perm(const std::string& text) {
  std::vector<int> images = parse_int_list(text);
  try {
    return Perm::from_image_list(images);
  } catch (const DomainError& e) {
    throw ParseError(std::string("not an image list of a permutation: ") +
                     e.what());
  }
}

std::string format_perm(const Perm& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p.domain()[i] != i + 1)
      throw DomainError("image-list form needs domain 1..n");
  Config images(p.images().begin(), p.images().end());
  return format_config(images);
}

}  // namespace rooms
