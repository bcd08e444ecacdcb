#include "ktlab/covering.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktlab {

namespace {

bool node_order(const Node& a, const Node& b) {
  return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
}

}  // namespace

IntervalSet IntervalSet::from_prefixes(std::vector<Node> prefixes) {
  std::sort(prefixes.begin(), prefixes.end(), node_order);
  // Drop prefixes covered by a shorter one.
  std::vector<Node> kept;
  for (const Node& p : prefixes) {
    bool covered = false;
    for (const Node& k : kept) {
      if (k.is_prefix_of(p)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      kept.push_back(p);
    }
  }
  // Merge sibling pairs to a fixpoint: [w0] + [w1] = [w].
  std::set<Node> pool(kept.begin(), kept.end());
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = pool.begin(); it != pool.end(); ++it) {
      if (it->empty()) {
        continue;
      }
      const Node sib = it->sibling();
      if (pool.count(sib)) {
        const Node parent = it->parent();
        pool.erase(sib);
        pool.erase(*it);
        pool.insert(parent);
        merged = true;
        break;
      }
    }
  }
  IntervalSet set;
  set.prefixes_.assign(pool.begin(), pool.end());
  std::sort(set.prefixes_.begin(), set.prefixes_.end(), node_order);
  return set;
}

IntervalSet IntervalSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open interval set file: " + path);
  }
  return parse(in, path);
}

IntervalSet IntervalSet::parse(std::istream& in, const std::string& origin) {
  std::vector<Node> prefixes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": bad prefix line");
    }
    prefixes.push_back(Node::parse(token));
  }
  return from_prefixes(std::move(prefixes));
}

void IntervalSet::save(std::ostream& out) const {
  for (const Node& p : prefixes_) {
    out << p.str() << '\n';
  }
}

Dyadic IntervalSet::measure() const {
  Dyadic total;
  for (const Node& p : prefixes_) {
    total += p.measure();
  }
  return total;
}

bool IntervalSet::contains_point_prefix(const Node& x) const {
  for (const Node& p : prefixes_) {
    if (p.is_prefix_of(x)) {
      return true;
    }
  }
  return false;
}

bool IntervalSet::intersects(const Node& u) const {
  for (const Node& p : prefixes_) {
    if (p.comparable_with(u)) {
      return true;
    }
  }
  return false;
}

bool IntervalSet::covers(const Node& u) const {
  // [u] subset of the union iff the quotient by u is the full space.
  return quotient(u).measure() == Dyadic(1);
}

std::variant<IntervalSet::Factorization, IntervalSet::FactorizationFailure>
IntervalSet::decompose_tail(const Node& x) const {
  Factorization f;
  std::size_t pos = 0;
  while (pos < x.size()) {
    const Node rest = Node(x.bits().substr(pos));
    const Node* match = nullptr;
    for (const Node& p : prefixes_) {
      if (p.is_prefix_of(rest) && !p.empty()) {
        match = &p;
        break;
      }
    }
    if (match == nullptr) {
      return FactorizationFailure{pos};
    }
    f.pieces.push_back(*match);
    pos += match->size();
  }
  return f;
}

IntervalSet IntervalSet::quotient(const Node& u) const {
  std::vector<Node> out;
  for (const Node& p : prefixes_) {
    if (p.is_prefix_of(u)) {
      // [u] lies inside [p]: the quotient is everything.
      return from_prefixes({Node::root()});
    }
    if (u.is_prefix_of(p)) {
      out.push_back(p.suffix_after(u));
    }
  }
  return from_prefixes(std::move(out));
}

Dyadic iterated_measure(const IntervalSet& U, std::uint64_t n) {
  return U.measure().pow(n);
}

std::uint64_t iterations_below(const IntervalSet& U, std::uint64_t t) {
  const Dyadic rho = U.measure();
  if (!(rho < Dyadic(1))) {
    throw std::invalid_argument("iterations_below requires measure < 1");
  }
  const Dyadic bound = Dyadic::pow2_neg(t);
  Dyadic power(1);
  std::uint64_t n = 0;
  while (!(power < bound)) {
    power = power * rho;
    ++n;
  }
  return n;
}

EscapeResult escape_sequence(const IntervalSet& U, const IntervalSet& V, std::uint64_t rounds) {
  if (!(V.measure() < Dyadic(1))) {
    throw std::invalid_argument("escape_sequence requires measure(V) < 1");
  }
  EscapeResult result;
  IntervalSet current = V;
  Node prefix = Node::root();
  for (std::uint64_t round = 0; round < rounds; ++round) {
    const Node* chosen = nullptr;
    for (const Node& u : U.prefixes()) {
      if (!current.covers(u)) {
        chosen = &u;
        break;
      }
    }
    if (chosen == nullptr) {
      result.obstruction_round = round;
      break;
    }
    result.pieces.push_back(*chosen);
    prefix = prefix.concat(*chosen);
    current = current.quotient(*chosen);
  }
  result.sequence = prefix;
  return result;
}

ProductOpenSet ProductOpenSet::series_to_open(std::vector<Dyadic> terms) {
  for (const Dyadic& a : terms) {
    if (a.is_zero() || !(a < Dyadic(1))) {
      throw std::invalid_argument("series terms must lie strictly inside (0,1), got " + a.str());
    }
  }
  return from_thresholds(std::move(terms));
}

ProductOpenSet ProductOpenSet::from_thresholds(std::vector<Dyadic> thresholds) {
  for (const Dyadic& z : thresholds) {
    if (!(z < Dyadic(1))) {
      throw std::invalid_argument("threshold must be < 1, got " + z.str());
    }
  }
  ProductOpenSet set;
  set.thresholds_ = std::move(thresholds);
  return set;
}

ProductOpenSet ProductOpenSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open threshold file: " + path);
  }
  return parse(in, path);
}

ProductOpenSet ProductOpenSet::parse(std::istream& in, const std::string& origin) {
  std::vector<Dyadic> thresholds;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string mant;
    std::uint64_t exponent = 0;
    if (!(fields >> mant >> exponent)) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected 'mantissa exponent'");
    }
    thresholds.push_back(Dyadic::from_parts(BigInt(mant), exponent));
  }
  return from_thresholds(std::move(thresholds));
}

void ProductOpenSet::save(std::ostream& out) const {
  for (const Dyadic& z : thresholds_) {
    out << z.mantissa().str() << ' ' << z.exponent() << '\n';
  }
}

Dyadic ProductOpenSet::complement_measure() const {
  Dyadic product(1);
  for (const Dyadic& z : thresholds_) {
    product = product * (Dyadic(1) - z);
  }
  return product;
}

Dyadic ProductOpenSet::measure() const { return Dyadic(1) - complement_measure(); }

}  // namespace ktlab
