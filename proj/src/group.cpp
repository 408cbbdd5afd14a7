#include "gammalab/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace gammalab {

namespace {

std::string triple(const std::vector<std::string>& labels, Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << labels[static_cast<std::size_t>(a)] << ", " << labels[static_cast<std::size_t>(b)]
     << ", " << labels[static_cast<std::size_t>(c)] << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::vector<std::string> labels) {
  const auto n = table.size();
  if (n == 0) throw GroupValidationError("group table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      std::ostringstream os;
      os << "group table row " << a << " has " << table[a].size() << " entries, expected " << n;
      throw GroupValidationError(os.str());
    }
    for (auto v : table[a])
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        std::ostringstream os;
        os << "group table row " << a << " contains out-of-range index " << v;
        throw GroupValidationError(os.str());
      }
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != n) throw GroupValidationError("label count does not match group order");

  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != static_cast<Element>(a) || table[a][0] != static_cast<Element>(a)) {
      std::ostringstream os;
      os << "element 0 is not a two-sided identity: fails at element " << labels[a];
      throw GroupValidationError(os.str());
    }

  FiniteGroup g;
  g.inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inverse_[a] = static_cast<Element>(b);
        break;
      }
    if (g.inverse_[a] < 0) {
      std::ostringstream os;
      os << "element " << labels[a] << " (index " << a << ") is not invertible";
      throw GroupValidationError(os.str());
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto ab = static_cast<std::size_t>(table[a][b]);
        const auto bc = static_cast<std::size_t>(table[b][c]);
        if (table[ab][c] != table[a][bc])
          throw GroupValidationError(
              "table is not associative at triple " +
              triple(labels, static_cast<Element>(a), static_cast<Element>(b),
                     static_cast<Element>(c)));
      }
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  return g;
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element out = 0;
  for (long long i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_central(Element a) const {
  for (Element b = 0; b < order(); ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> out;
  for (Element a = 0; a < order(); ++a)
    if (is_central(a)) out.push_back(a);
  return out;
}

Element FiniteGroup::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<Element>(it - labels_.begin());
}

std::vector<Element> FiniteGroup::closure(const std::vector<Element>& generators) const {
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : generators) {
      Element x = mul(members[i], s);
      if (!in[idx(x)]) {
        in[idx(x)] = 1;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> FiniteGroup::generating_set() const {
  std::vector<Element> gens;
  std::vector<Element> span{0};
  // Prefer elements of large order so cyclic groups get a single generator.
  std::vector<Element> candidates(static_cast<std::size_t>(order()));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
    return element_order(a) > element_order(b);
  });
  for (Element g : candidates) {
    if (static_cast<int>(span.size()) == order()) break;
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(gens);
  }
  return gens;
}

bool FiniteGroup::is_p_group(int p) const {
  int n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

OrientationChar::OrientationChar(const FiniteGroup& g, std::vector<int> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
  if (static_cast<int>(values_.size()) != g.order())
    throw std::invalid_argument("orientation character has wrong length");
  for (int v : values_)
    if (v != 1 && v != -1) throw std::invalid_argument("orientation character values must be +-1");
  if (values_[0] != 1) throw std::invalid_argument("orientation character must send 1 to +1");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if ((*this)(g.mul(a, b)) != (*this)(a) * (*this)(b)) {
        std::ostringstream os;
        os << "orientation character is not a homomorphism at (" << g.label(a) << ", "
           << g.label(b) << ")";
        throw std::invalid_argument(os.str());
      }
}

OrientationChar OrientationChar::trivial(const FiniteGroup& g) {
  return OrientationChar(g, std::vector<int>(static_cast<std::size_t>(g.order()), 1), "trivial");
}

bool OrientationChar::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 1; });
}

std::vector<OrientationChar> all_characters(const FiniteGroup& g) {
  const auto gens = g.generating_set();
  std::vector<OrientationChar> out;
  const auto count = 1u << gens.size();
  for (unsigned mask = 0; mask < count; ++mask) {
    // Extend the generator signs along words; reject inconsistent assignments.
    std::vector<int> values(static_cast<std::size_t>(g.order()), 0);
    values[0] = 1;
    std::deque<Element> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element y = g.mul(x, gens[k]);
        int v = values[static_cast<std::size_t>(x)] * ((mask >> k) & 1u ? -1 : 1);
        auto& slot = values[static_cast<std::size_t>(y)];
        if (slot == 0) {
          slot = v;
          queue.push_back(y);
        } else if (slot != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    try {
      out.emplace_back(g, values, mask == 0 ? "trivial" : "w" + std::to_string(out.size()));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

GroupRingElement GroupRingElement::basis(int order, Element g, const Integer& c) {
  IntVector v = IntVector::Zero(order);
  v(g) = c;
  return GroupRingElement(std::move(v));
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (o.size() != size()) throw std::invalid_argument("group ring elements of different length");
  coeffs_ += o.coeffs_;
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  if (o.size() != size()) throw std::invalid_argument("group ring elements of different length");
  coeffs_ -= o.coeffs_;
  return *this;
}

GroupRingElement multiply(const FiniteGroup& g, const GroupRingElement& x,
                          const GroupRingElement& y) {
  const int n = g.order();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("group ring element length does not match group order");
  IntVector out = IntVector::Zero(n);
  for (Element a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    for (Element b = 0; b < n; ++b)
      if (y[b] != 0) out(g.mul(a, b)) += x[a] * y[b];
  }
  return GroupRingElement(std::move(out));
}

GroupRingElement bar_involution(const FiniteGroup& g, const OrientationChar& w,
                                const GroupRingElement& x) {
  const int n = g.order();
  IntVector out = IntVector::Zero(n);
  for (Element a = 0; a < n; ++a)
    if (x[a] != 0) out(g.inverse(a)) += w(a) * x[a];
  return GroupRingElement(std::move(out));
}

GroupRingElement norm_element(const FiniteGroup& g, const OrientationChar& w) {
  IntVector out(g.order());
  for (Element a = 0; a < g.order(); ++a) out(a) = w(a);
  return GroupRingElement(std::move(out));
}

Integer twisted_augmentation(const OrientationChar& w, const GroupRingElement& x) {
  Integer s = 0;
  for (Element a = 0; a < x.size(); ++a) s += w(a) * x[a];
  return s;
}

std::vector<Element> central_involutions(const FiniteGroup& g, const OrientationChar& w) {
  std::vector<Element> out;
  for (Element a = 1; a < g.order(); ++a)
    if (g.mul(a, a) == 0 && w(a) == 1 && g.is_central(a)) out.push_back(a);
  return out;
}

SubgroupCosets subgroup_and_cosets(const FiniteGroup& g, const std::vector<Element>& generators) {
  SubgroupCosets out;
  out.subgroup = g.closure(generators);
  out.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (Element x = 0; x < g.order(); ++x) {
    if (out.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    // x is the least index not yet covered, hence the minimal element of U x.
    const int c = static_cast<int>(out.representatives.size());
    out.representatives.push_back(x);
    for (Element u : out.subgroup) out.coset_of[static_cast<std::size_t>(g.mul(u, x))] = c;
  }
  return out;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Element>& subgroup) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Element u : subgroup) in[static_cast<std::size_t>(u)] = 1;
  for (Element x = 0; x < g.order(); ++x)
    for (Element u : subgroup)
      if (!in[static_cast<std::size_t>(g.mul(g.mul(x, u), g.inverse(x)))]) return false;
  return true;
}

int p_part(int order, int p) {
  int out = 1;
  while (order % p == 0) {
    order /= p;
    out *= p;
  }
  return out;
}

std::vector<Element> sylow_subgroup(const FiniteGroup& g, int p) {
  const int target = p_part(g.order(), p);
  std::vector<Element> current{0};
  auto is_p_power = [p](int k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  // Greedy growth is enough at this scale; a failed branch falls back to the next start.
  for (Element start = 0; start < g.order(); ++start) {
    if (!is_p_power(g.element_order(start))) continue;
    std::vector<Element> gens{start};
    current = g.closure(gens);
    for (Element x = 0; x < g.order() && static_cast<int>(current.size()) < target; ++x) {
      if (!is_p_power(g.element_order(x))) continue;
      auto trial = gens;
      trial.push_back(x);
      auto span = g.closure(trial);
      if (is_p_power(static_cast<int>(span.size())) && span.size() > current.size()) {
        gens = trial;
        current = span;
      }
    }
    if (static_cast<int>(current.size()) == target) return current;
  }
  throw std::logic_error("sylow_subgroup: greedy search failed");
}

std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g, int max_order) {
  const int n = g.order();
  if (n > max_order) {
    std::ostringstream os;
    os << "group of order " << n << " is too large for automorphism enumeration (cap " << max_order
       << ")";
    throw EnumerationLimitError(os.str());
  }
  const auto gens = g.generating_set();
  std::vector<std::vector<Element>> candidates;
  for (Element s : gens) {
    std::vector<Element> c;
    for (Element x = 0; x < n; ++x)
      if (g.element_order(x) == g.element_order(s)) c.push_back(x);
    candidates.push_back(std::move(c));
  }

  std::vector<std::vector<Element>> out;
  std::vector<Element> images(gens.size(), 0);
  // Odometer over candidate images of the generators.
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][choice[k]];

    std::vector<Element> perm(static_cast<std::size_t>(n), -1);
    perm[0] = 0;
    std::deque<Element> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element y = g.mul(x, gens[k]);
        Element fy = g.mul(perm[static_cast<std::size_t>(x)], images[k]);
        auto& slot = perm[static_cast<std::size_t>(y)];
        if (slot < 0) {
          slot = fy;
          queue.push_back(y);
        } else if (slot != fy) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<char> hit(static_cast<std::size_t>(n), 0);
      for (Element v : perm) hit[static_cast<std::size_t>(v)] = 1;
      ok = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    }
    for (Element a = 0; ok && a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (perm[static_cast<std::size_t>(g.mul(a, b))] !=
            g.mul(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(perm);

    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      if (++choice[k] < candidates[k].size()) break;
      choice[k] = 0;
    }
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gammalab
