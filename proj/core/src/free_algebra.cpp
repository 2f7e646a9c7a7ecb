#include "qcorr/free_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcorr {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::a1: return "a1";
    case Generator::a2: return "a2";
    case Generator::b1: return "b1";
    case Generator::b2: return "b2";
  }
  throw std::logic_error("to_string: bad generator");
}

Generator Monomial::second() const {
  if (degree_ != 2)
    throw std::logic_error("Monomial::second: degree-1 monomial");
  return second_;
}

std::string Monomial::to_string() const {
  if (degree_ == 1) return qcorr::to_string(first_);
  return qcorr::to_string(first_) + "□" + qcorr::to_string(second_);
}

std::vector<Monomial> Monomial::all_pairs() {
  constexpr Generator gens[] = {Generator::a1, Generator::a2, Generator::b1,
                                Generator::b2};
  std::vector<Monomial> out;
  out.reserve(16);
  for (const Generator x : gens)
    for (const Generator y : gens) out.push_back(Monomial::pair(x, y));
  return out;
}

FreeElement FreeElement::generator(Generator g) {
  return monomial(Monomial::gen(g));
}

FreeElement FreeElement::monomial(const Monomial& m, const ExactScalar& coeff) {
  FreeElement x;
  if (!coeff.is_zero()) x.coeffs_.emplace(m, coeff);
  return x;
}

int FreeElement::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : coeffs_) d = std::max(d, m.degree());
  return d;
}

ExactScalar FreeElement::coefficient(const Monomial& m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? ExactScalar() : it->second;
}

FreeElement& FreeElement::operator+=(const FreeElement& rhs) {
  for (const auto& [m, c] : rhs.coeffs_) {
    const auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
      coeffs_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& rhs) {
  return *this += ExactScalar(-1) * rhs;
}

FreeElement operator*(const ExactScalar& s, const FreeElement& x) {
  FreeElement out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : x.coeffs_) out.coeffs_.emplace(m, s * c);
  return out;
}

FreeElement FreeElement::square() const {
  if (max_degree() > 1)
    throw std::invalid_argument(
        "FreeElement::square: defined for degree-1 elements only");
  FreeElement out;
  for (const auto& [mi, ci] : coeffs_)
    for (const auto& [mj, cj] : coeffs_) {
      const FreeElement term =
          monomial(Monomial::pair(mi.first(), mj.first()), ci * cj);
      out += term;
    }
  return out;
}

std::string FreeElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")·" + m.to_string();
  }
  return out;
}

ComplexMatrix substitute(
    const FreeElement& x,
    const std::map<Generator, HermitianMatrix>& assignment) {
  const auto lookup = [&](Generator g) -> const HermitianMatrix& {
    const auto it = assignment.find(g);
    if (it == assignment.end())
      throw std::invalid_argument("substitute: no matrix assigned to " +
                                  to_string(g));
    return it->second;
  };
  std::size_t dim = 0;
  for (const auto& [g, m] : assignment) {
    if (dim == 0) dim = m.dim();
    if (m.dim() != dim)
      throw std::invalid_argument("substitute: assignment dimensions differ");
  }
  if (dim == 0) throw std::invalid_argument("substitute: empty assignment");

  ComplexMatrix out(dim, dim);
  for (const auto& [m, c] : x.terms()) {
    ComplexMatrix term = m.degree() == 1
                             ? lookup(m.first()).matrix()
                             : mat_mul(lookup(m.first()).matrix(),
                                       lookup(m.second()).matrix());
    term *= c.to_double();
    out += term;
  }
  return out;
}

std::vector<FreeElement> sos_square_arguments(bool flip_alice) {
  const ExactScalar gamma = ExactScalar(1) + ExactScalar::sqrt2();
  const ExactScalar one(1), minus(-1);
  const ExactScalar sa = flip_alice ? minus : one;  // sign carried by a1, a2

  const FreeElement a1 = sa * FreeElement::generator(Generator::a1);
  const FreeElement a2 = sa * FreeElement::generator(Generator::a2);
  const FreeElement b1 = FreeElement::generator(Generator::b1);
  const FreeElement b2 = FreeElement::generator(Generator::b2);

  std::vector<FreeElement> args;
  args.push_back(gamma * (a1 - b1) + a2 - b2);
  args.push_back(gamma * (a1 - b2) - a2 - b1);
  args.push_back(gamma * (a2 - b1) + a1 + b2);
  args.push_back(gamma * (a2 + b2) - a1 - b1);
  return args;
}

FreeElement chsh_symmetrized_element() {
  const auto pair = [](Generator x, Generator y) {
    return FreeElement::monomial(Monomial::pair(x, y));
  };
  using G = Generator;
  return pair(G::a1, G::b1) + pair(G::b1, G::a1) + pair(G::a1, G::b2) +
         pair(G::b2, G::a1) + pair(G::a2, G::b1) + pair(G::b1, G::a2) -
         pair(G::a2, G::b2) - pair(G::b2, G::a2);
}

SosReport verify_sos_identity(bool flip_alice) {
  FreeElement lhs;
  for (const FreeElement& arg : sos_square_arguments(flip_alice))
    lhs += arg.square();

  const ExactScalar sqrt2 = ExactScalar::sqrt2();
  const ExactScalar square_coeff = ExactScalar(4) * (ExactScalar(2) + sqrt2);
  // the cross part changes sign together with a1, a2
  const ExactScalar cross_coeff =
      ExactScalar(flip_alice ? 4 : -4) * (ExactScalar(1) + sqrt2);

  FreeElement rhs;
  for (const Generator g : {Generator::a1, Generator::a2, Generator::b1,
                            Generator::b2})
    rhs += square_coeff * FreeElement::monomial(Monomial::pair(g, g));
  rhs += cross_coeff * chsh_symmetrized_element();

  SosReport report;
  report.difference = lhs - rhs;
  report.identity_holds = report.difference.is_zero();
  for (const Monomial& m : Monomial::all_pairs()) {
    const ExactScalar cl = lhs.coefficient(m);
    const ExactScalar cr = rhs.coefficient(m);
    report.slots.push_back({m, cl, cr, cl - cr});
  }
  return report;
}

}  // namespace qcorr
