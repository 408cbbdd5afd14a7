#include "gammalab/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace gammalab {

struct AbelianPresentation::Cache {
  std::once_flag once;
  AbelianStructure structure;
};

namespace {

AbelianStructure compute_structure(Eigen::Index n, const IntMatrix& relations) {
  AbelianStructure s;
  if (relations.rows() == 0 || is_zero_matrix(relations)) {
    s.invariants.free_rank = static_cast<std::size_t>(n);
    s.moduli.assign(static_cast<std::size_t>(n), Integer(0));
    s.to_canonical = IntMatrix::Identity(n, n);
    s.from_canonical = IntMatrix::Identity(n, n);
    return s;
  }
  // U R V = D: the automorphism x -> V^T x carries rowspan(R) onto the diagonal lattice.
  auto snf = smith_normal_form(relations, PivotStrategy::MinAbs, SmithTransforms::Right);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < snf.rank; ++i) {
    if (snf.D(i, i) == 1) continue;
    keep.push_back(i);
    s.moduli.push_back(snf.D(i, i));
    s.invariants.torsion.push_back(snf.D(i, i));
  }
  for (Eigen::Index i = snf.rank; i < n; ++i) {
    keep.push_back(i);
    s.moduli.push_back(Integer(0));
  }
  s.invariants.free_rank = static_cast<std::size_t>(n - snf.rank);
  const auto k = static_cast<Eigen::Index>(keep.size());
  s.to_canonical.resize(k, n);
  s.from_canonical.resize(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const auto i = keep[static_cast<std::size_t>(c)];
    s.to_canonical.row(c) = snf.V.col(i).transpose();
    s.from_canonical.col(c) = snf.V_inv.row(i).transpose();
  }
  return s;
}

/// Bezout coefficients for a vector with gcd 1 (empty optional otherwise).
std::optional<IntVector> unit_combination(const IntVector& c) {
  IntVector coeffs = IntVector::Zero(c.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (c(i) == 0) continue;
    Integer s, t;
    Integer next = detail::scalar_xgcd(g, Integer(c(i)), s, t);
    coeffs *= s;
    coeffs(i) = t;
    g = next;
  }
  if (g != 1) return std::nullopt;
  return coeffs;
}

}  // namespace

Integer InvariantFactors::torsion_order() const {
  Integer out = 1;
  for (const auto& d : torsion) out *= d;
  return out;
}

std::string InvariantFactors::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

AbelianPresentation::AbelianPresentation()
    : relations_(0, 0), cache_(std::make_shared<Cache>()) {}

AbelianPresentation::AbelianPresentation(Eigen::Index ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)), cache_(std::make_shared<Cache>()) {
  if (ngens < 0) throw std::invalid_argument("AbelianPresentation: negative generator count");
  if (relations_.rows() == 0) relations_.resize(0, ngens);
  if (relations_.cols() != ngens)
    throw std::invalid_argument("AbelianPresentation: relation rows must have ngens columns");
}

AbelianPresentation AbelianPresentation::free(Eigen::Index rank) {
  return AbelianPresentation(rank, IntMatrix(0, rank));
}

AbelianPresentation AbelianPresentation::cyclic(const Integer& order) {
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return AbelianPresentation(1, r);
}

AbelianPresentation AbelianPresentation::from_invariants(const InvariantFactors& f) {
  const auto t = static_cast<Eigen::Index>(f.torsion.size());
  const auto n = t + static_cast<Eigen::Index>(f.free_rank);
  IntMatrix r = IntMatrix::Zero(t, n);
  for (Eigen::Index i = 0; i < t; ++i) r(i, i) = f.torsion[static_cast<std::size_t>(i)];
  return AbelianPresentation(n, r);
}

const AbelianStructure& AbelianPresentation::structure() const {
  // Copies share the cache; only a moved-from object needs a fresh one.
  static std::mutex attach_mutex;
  std::shared_ptr<Cache> cache;
  {
    std::lock_guard<std::mutex> lock(attach_mutex);
    if (!cache_) const_cast<AbelianPresentation*>(this)->cache_ = std::make_shared<Cache>();
    cache = cache_;
  }
  std::call_once(cache->once, [&] { cache->structure = compute_structure(ngens_, relations_); });
  return cache->structure;
}

bool AbelianPresentation::is_zero(const IntVector& x) const {
  if (x.size() != ngens_) throw std::invalid_argument("is_zero: element has wrong length");
  if (relations_.rows() == 0) return is_zero_matrix(x);
  const auto& s = structure();
  IntVector c = exact_product(s.to_canonical, x);
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const auto& d = s.moduli[static_cast<std::size_t>(k)];
    if (d == 0 ? c(k) != 0 : c(k) % d != 0) return false;
  }
  // Coordinates with trivial Smith factor are unconstrained.
  return true;
}

AbelianPresentation AbelianPresentation::with_relations(const IntMatrix& extra) const {
  if (extra.rows() == 0) return *this;
  if (extra.cols() != ngens_) throw std::invalid_argument("with_relations: wrong width");
  IntMatrix r(relations_.rows() + extra.rows(), ngens_);
  r << relations_, extra;
  return AbelianPresentation(ngens_, r);
}

IntVector AbelianStructure::reduce(const IntVector& x) const {
  IntVector c = exact_product(to_canonical, x);
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const auto& d = moduli[static_cast<std::size_t>(k)];
    if (d != 0) c(k) = floor_mod(c(k), d);
  }
  return c;
}

InvariantFactors invariant_factors(const AbelianPresentation& a) {
  return a.structure().invariants;
}

AbelianHom::AbelianHom(AbelianPresentation source, AbelianPresentation target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens()) {
    std::ostringstream os;
    os << "AbelianHom: matrix is " << matrix_.rows() << "x" << matrix_.cols() << ", expected "
       << target_.ngens() << "x" << source_.ngens();
    throw std::invalid_argument(os.str());
  }
  const auto& rel = source_.relations();
  for (Eigen::Index i = 0; i < rel.rows(); ++i) {
    IntVector image = exact_product(matrix_, rel.row(i).transpose());
    if (!target_.is_zero(image)) {
      std::ostringstream os;
      os << "AbelianHom: source relation " << i << " is not sent to zero";
      throw std::invalid_argument(os.str());
    }
  }
}

AbelianHom::AbelianHom(AbelianPresentation source, AbelianPresentation target, IntMatrix matrix,
                       Trusted)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

AbelianHom AbelianHom::identity(const AbelianPresentation& a) {
  return AbelianHom(a, a, IntMatrix::Identity(a.ngens(), a.ngens()), Trusted{});
}

AbelianHom AbelianHom::zero(const AbelianPresentation& source, const AbelianPresentation& target) {
  return AbelianHom(source, target, IntMatrix::Zero(target.ngens(), source.ngens()), Trusted{});
}

bool AbelianHom::equals(const AbelianHom& other) const {
  if (other.matrix_.rows() != matrix_.rows() || other.matrix_.cols() != matrix_.cols())
    return false;
  for (Eigen::Index j = 0; j < matrix_.cols(); ++j)
    if (!target_.is_zero(IntVector(matrix_.col(j) - other.matrix_.col(j)))) return false;
  return true;
}

AbelianHom compose(const AbelianHom& after, const AbelianHom& before) {
  if (after.source().ngens() != before.target().ngens())
    throw std::invalid_argument("compose: incompatible homomorphisms");
  return AbelianHom(before.source(), after.target(), exact_product(after.matrix(), before.matrix()),
                    AbelianHom::Trusted{});
}

AbelianHom add(const AbelianHom& f, const AbelianHom& g) {
  if (f.matrix().rows() != g.matrix().rows() || f.matrix().cols() != g.matrix().cols())
    throw std::invalid_argument("add: shape mismatch");
  return AbelianHom(f.source(), f.target(), f.matrix() + g.matrix(), AbelianHom::Trusted{});
}

AbelianHom scale(const Integer& k, const AbelianHom& f) {
  return AbelianHom(f.source(), f.target(), IntMatrix(f.matrix() * k), AbelianHom::Trusted{});
}

AbelianPresentation direct_sum(const AbelianPresentation& a, const AbelianPresentation& b) {
  const auto n = a.ngens() + b.ngens();
  IntMatrix r = IntMatrix::Zero(a.relations().rows() + b.relations().rows(), n);
  r.topLeftCorner(a.relations().rows(), a.ngens()) = a.relations();
  r.bottomRightCorner(b.relations().rows(), b.ngens()) = b.relations();
  return AbelianPresentation(n, r);
}

std::pair<AbelianPresentation, AbelianHom> torsion_part(const AbelianPresentation& a) {
  const auto& s = a.structure();
  const auto t = static_cast<Eigen::Index>(s.invariants.torsion.size());
  InvariantFactors tf;
  tf.torsion = s.invariants.torsion;
  auto tors = AbelianPresentation::from_invariants(tf);
  IntMatrix inclusion = s.from_canonical.leftCols(t);
  return {tors, AbelianHom(tors, a, inclusion)};
}

std::optional<IntVector> splitting_functional(const AbelianPresentation& a, const IntVector& x) {
  const auto& s = a.structure();
  const auto t = static_cast<Eigen::Index>(s.invariants.torsion.size());
  const auto f = static_cast<Eigen::Index>(s.invariants.free_rank);
  IntVector c = exact_product(s.to_canonical, x);
  auto coeffs = unit_combination(IntVector(c.tail(f)));
  if (!coeffs) return std::nullopt;
  // phi = coeffs^T * (free rows of to_canonical); relations have zero free coordinates.
  IntVector phi = s.to_canonical.middleRows(t, f).transpose() * *coeffs;
  return phi;
}

bool is_primitive_mod_torsion(const AbelianPresentation& a, const IntVector& x) {
  return splitting_functional(a, x).has_value();
}

AbelianPresentation tensor_over_Z(const AbelianPresentation& a, const AbelianPresentation& b) {
  const auto na = a.ngens(), nb = b.ngens();
  const auto& ra = a.relations();
  const auto& rb = b.relations();
  IntMatrix r = IntMatrix::Zero(ra.rows() * nb + rb.rows() * na, na * nb);
  Eigen::Index row = 0;
  for (Eigen::Index k = 0; k < ra.rows(); ++k)
    for (Eigen::Index j = 0; j < nb; ++j, ++row)
      for (Eigen::Index i = 0; i < na; ++i) r(row, i * nb + j) = ra(k, i);
  for (Eigen::Index k = 0; k < rb.rows(); ++k)
    for (Eigen::Index i = 0; i < na; ++i, ++row)
      for (Eigen::Index j = 0; j < nb; ++j) r(row, i * nb + j) = rb(k, j);
  return AbelianPresentation(na * nb, r);
}

std::pair<AbelianPresentation, AbelianHom> quotient(const AbelianPresentation& a,
                                                    const IntMatrix& elements) {
  if (elements.rows() != a.ngens()) throw std::invalid_argument("quotient: wrong element length");
  auto q = a.with_relations(elements.transpose());
  return {q, AbelianHom(a, q, IntMatrix::Identity(a.ngens(), a.ngens()), AbelianHom::Trusted{})};
}

std::pair<AbelianPresentation, AbelianHom> kernel(const AbelianHom& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  const auto a = src.ngens();
  // Work in the target's canonical coordinates, where the relations are diagonal:
  // x is in the kernel iff each torsion coordinate of F x is a multiple of its modulus
  // and each free coordinate vanishes.
  const auto& s = tgt.structure();
  std::vector<Eigen::Index> torsion;
  for (std::size_t k = 0; k < s.moduli.size(); ++k)
    if (s.moduli[k] != 0) torsion.push_back(static_cast<Eigen::Index>(k));
  const auto rows = static_cast<Eigen::Index>(s.moduli.size());
  const auto t = static_cast<Eigen::Index>(torsion.size());
  IntMatrix joint = IntMatrix::Zero(rows, a + t);
  joint.leftCols(a) = exact_product(s.to_canonical, f.matrix());
  for (Eigen::Index c = 0; c < t; ++c) {
    const auto k = torsion[static_cast<std::size_t>(c)];
    joint(k, a + c) = -s.moduli[static_cast<std::size_t>(k)];
  }
  auto ker = integer_kernel(joint);
  Sublattice preimage(IntMatrix(ker.basis.topRows(a)));
  const auto& ra = src.relations();
  IntMatrix rel(ra.rows(), preimage.rank());
  for (Eigen::Index i = 0; i < ra.rows(); ++i) {
    auto c = preimage.coordinates(ra.row(i).transpose());
    if (!c) throw std::logic_error("kernel: source relation outside preimage lattice");
    rel.row(i) = c->transpose();
  }
  AbelianPresentation k(preimage.rank(), rel);
  return {k, AbelianHom(k, src, preimage.basis(), AbelianHom::Trusted{})};
}

std::pair<AbelianPresentation, AbelianHom> cokernel(const AbelianHom& f) {
  return quotient(f.target(), f.matrix());
}

bool is_injective(const AbelianHom& f) { return invariant_factors(kernel(f).first).is_trivial(); }

bool is_surjective(const AbelianHom& f) {
  return invariant_factors(cokernel(f).first).is_trivial();
}

std::vector<IntVector> enumerate_elements(const AbelianStructure& s) {
  if (!s.invariants.is_finite())
    throw std::invalid_argument("enumerate_elements: group is infinite");
  const auto k = static_cast<Eigen::Index>(s.moduli.size());
  std::vector<IntVector> out;
  IntVector c = IntVector::Zero(k);
  while (true) {
    out.push_back(c);
    Eigen::Index i = k - 1;
    for (; i >= 0; --i) {
      c(i) += 1;
      if (c(i) < s.moduli[static_cast<std::size_t>(i)]) break;
      c(i) = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace gammalab
