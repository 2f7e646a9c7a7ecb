#ifndef QCORR_FREE_ALGEBRA_HPP
#define QCORR_FREE_ALGEBRA_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qcorr/exact.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// Generators of the free bilinear algebra carrying the CHSH identity.
enum class Generator { a1, a2, b1, b2 };

std::string to_string(Generator g);

/// A generator, or an ordered product x*y of two generators. The product is
/// neither commutative nor associative, so x*y and y*x stay distinct and no
/// monomial of degree > 2 ever exists here.
class Monomial {
public:
  static Monomial gen(Generator g) { return Monomial(g); }
  static Monomial pair(Generator x, Generator y) { return Monomial(x, y); }

  int degree() const { return degree_; }
  Generator first() const { return first_; }
  Generator second() const;  // throws unless degree 2

  /// Degree-1 monomials first, then pairs lexicographically; generators
  /// ordered a1, a2, b1, b2.
  friend std::strong_ordering operator<=>(const Monomial&,
                                          const Monomial&) = default;

  std::string to_string() const;

  /// All 16 ordered pairs in canonical order.
  static std::vector<Monomial> all_pairs();

private:
  explicit Monomial(Generator g) : degree_(1), first_(g), second_(g) {}
  Monomial(Generator x, Generator y) : degree_(2), first_(x), second_(y) {}

  int degree_;
  Generator first_;
  Generator second_;
};

/// Formal linear combination of monomials over Q(sqrt 2); zero coefficients
/// are never stored, so equality is map equality.
class FreeElement {
public:
  FreeElement() = default;
  static FreeElement generator(Generator g);
  static FreeElement monomial(const Monomial& m,
                              const ExactScalar& coeff = ExactScalar(1));

  bool is_zero() const { return coeffs_.empty(); }
  int max_degree() const;

  /// Zero when absent.
  ExactScalar coefficient(const Monomial& m) const;

  const std::map<Monomial, ExactScalar>& terms() const { return coeffs_; }

  FreeElement& operator+=(const FreeElement& rhs);
  FreeElement& operator-=(const FreeElement& rhs);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) {
    return a += b;
  }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) {
    return a -= b;
  }
  friend FreeElement operator*(const ExactScalar& s, const FreeElement& x);
  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  /// Bilinear square of a degree-1 element: (sum_i c_i g_i)^2 expands to
  /// sum_ij c_i c_j (g_i * g_j) with every ordered pair kept separate.
  /// Throws std::invalid_argument if any degree-2 term is present.
  FreeElement square() const;

  std::string to_string() const;

private:
  std::map<Monomial, ExactScalar> coeffs_;
};

/// Evaluates an element with the matrix product as the bilinear product and
/// coefficients taken to double. The assignment maps each generator that
/// occurs to a Hermitian matrix; all dimensions must agree.
ComplexMatrix substitute(const FreeElement& x,
                         const std::map<Generator, HermitianMatrix>& assignment);

struct SosSlot {
  Monomial monomial;
  ExactScalar lhs;  // coefficient in the sum of four squares
  ExactScalar rhs;  // coefficient in the closed form
  ExactScalar diff;
};

struct SosReport {
  bool identity_holds;
  FreeElement difference;
  std::vector<SosSlot> slots;  // the 16 degree-2 coefficient slots
};

/// Machine check of the sum-of-squares identity behind the 2*sqrt(2)
/// correlation bound: the four squares
///   ((1+s)(a1-b1) + a2 - b2)^2,  ((1+s)(a1-b2) - a2 - b1)^2,
///   ((1+s)(a2-b1) + a1 + b2)^2,  ((1+s)(a2+b2) - a1 - b1)^2,   s = sqrt(2),
/// summed exactly, against
///   4(2+s)(a1^2+a2^2+b1^2+b2^2)
///   - 4(1+s)(a1 b1 + b1 a1 + a1 b2 + b2 a1 + a2 b1 + b1 a2 - a2 b2 - b2 a2).
/// With flip_alice the substitution a1 -> -a1, a2 -> -a2 is applied and the
/// sign of the cross part flips, which certifies the lower bound.
SosReport verify_sos_identity(bool flip_alice = false);

/// The four degree-1 square arguments (after the optional sign flip).
std::vector<FreeElement> sos_square_arguments(bool flip_alice = false);

/// The symmetrized CHSH combination
/// a1 b1 + b1 a1 + a1 b2 + b2 a1 + a2 b1 + b1 a2 - a2 b2 - b2 a2.
FreeElement chsh_symmetrized_element();

}  // namespace qcorr

#endif
