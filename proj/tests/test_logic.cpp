#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcorr/logic.hpp"
#include "qcorr/random.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace qcorr;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2_v<double>;

Event plus_ray() {
  const std::array<Complex, 2> psi{Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0)};
  return Event::ray(psi);
}

State plus_state() {
  const std::array<Complex, 2> psi{Complex(1, 0), Complex(1, 0)};
  return State::pure(psi);
}

}  // namespace

TEST_CASE("event construction and validation") {
  CHECK(Event::zero(3).projection().matrix().max_abs() == 0.0);
  CHECK(Event::identity(3).projection().matrix().trace().real() == doctest::Approx(3.0));
  CHECK(Event::basis(3, 1).projection()(1, 1) == Complex(1, 0));

  ComplexMatrix half = Complex(0.5, 0.0) * ComplexMatrix::identity(2);
  CHECK_THROWS_AS(Event{HermitianMatrix(half)}, std::invalid_argument);
}

TEST_CASE("orthogonality") {
  const Event e0 = Event::basis(2, 0);
  const Event e1 = Event::basis(2, 1);
  CHECK(orthogonal(e0, e1));
  CHECK(!orthogonal(e0, e0));
  CHECK(!orthogonal(e0, plus_ray()));
}

TEST_CASE("event_sum") {
  const Event e0 = Event::basis(2, 0);
  const Event e1 = Event::basis(2, 1);
  const Event s = event_sum(e0, e1);
  CHECK((s.projection().matrix() - ComplexMatrix::identity(2)).max_abs() < 1e-12);

  const Event z = Event::zero(2);
  CHECK((event_sum(e0, z).projection().matrix() - e0.projection().matrix()).max_abs() == 0.0);

  const Event d = event_sum(Event::basis(3, 0), Event::basis(3, 2));
  CHECK(d.projection().matrix().trace().real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(event_sum(e0, plus_ray()), std::invalid_argument);
}

TEST_CASE("complement") {
  const Event e0 = Event::basis(2, 0);
  CHECK((complement(Event::zero(3)).projection().matrix() -
         ComplexMatrix::identity(3)).max_abs() == 0.0);
  CHECK(complement(Event::identity(3)).projection().matrix().max_abs() == 0.0);

  Stream g(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Event e = random_event(4, 1 + g.next_below(3), g);
    const Event cc = complement(complement(e));
    CHECK((cc.projection().matrix() - e.projection().matrix()).max_abs() < 1e-12);
    CHECK(orthogonal(e, complement(e)));
    const Event total = event_sum(e, complement(e));
    CHECK((total.projection().matrix() - ComplexMatrix::identity(4)).max_abs() < 1e-10);
  }
}

TEST_CASE("probability on closed-form inputs") {
  const State mu = plus_state();
  CHECK(probability(mu, Event::identity(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(probability(mu, Event::zero(2)) == doctest::Approx(0.0));
  CHECK(probability(mu, Event::basis(2, 0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(probability(mu, plus_ray()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("probability is additive on orthogonal events") {
  Stream g(32);
  for (int trial = 0; trial < 200; ++trial) {
    const State mu = random_state(5, g);
    const std::array<std::size_t, 2> ranks{1 + g.next_below(2), 1 + g.next_below(2)};
    const auto events = random_orthogonal_events(5, ranks, g);
    const double lhs = probability(mu, event_sum(events[0], events[1]));
    const double rhs = probability(mu, events[0]) + probability(mu, events[1]);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("conditional probability") {
  const State mu = plus_state();
  const Event e0 = Event::basis(2, 0);

  // Luders by hand: e0 mu e0 = |0><0|/2, so conditioning renormalizes to |0><0|
  CHECK(conditional_probability(mu, plus_ray(), e0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(conditional_probability(mu, e0, e0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(conditional_probability(mu, Event::basis(2, 1), e0) == doctest::Approx(0.0));

  // conditioning on the sure event changes nothing
  CHECK(conditional_probability(mu, e0, Event::identity(2)) ==
        doctest::Approx(probability(mu, e0)).epsilon(1e-12));

  CHECK_THROWS_AS(conditional_probability(mu, e0, Event::zero(2)), std::domain_error);
}

TEST_CASE("conditional state is a state concentrated on the event") {
  Stream g(33);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 200; ++trial) {
    const State mu = random_state(4, g);
    const Event e = random_event(4, 1 + g.next_below(3), g);
    if (probability(mu, e) < 0.05) continue;
    ++checked;

    const State nu = conditional_state(mu, e);
    CHECK(nu.rho().matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(probability(nu, e) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(probability(nu, complement(e)) < 1e-9);

    // agreement with the scalar update on a fresh event
    const Event f = random_event(4, 1 + g.next_below(3), g);
    CHECK(std::abs(probability(nu, f) - conditional_probability(mu, f, e)) < 1e-10);
  }
  REQUIRE(checked == 200);
}

TEST_CASE("observable_from_spectrum") {
  const std::vector<Event> basis{Event::basis(2, 0), Event::basis(2, 1)};
  const std::vector<double> pm{1.0, -1.0};
  const HermitianMatrix sz = observable_from_spectrum(pm, basis);
  CHECK(sz(0, 0) == Complex(1, 0));
  CHECK(sz(1, 1) == Complex(-1, 0));
  CHECK(sz(0, 1) == Complex(0, 0));

  const std::array<Complex, 2> plus{Complex(1, 0), Complex(1, 0)};
  const std::array<Complex, 2> minus{Complex(1, 0), Complex(-1, 0)};
  const std::vector<Event> pm_basis{Event::ray(plus), Event::ray(minus)};
  const HermitianMatrix sx = observable_from_spectrum(pm, pm_basis);
  CHECK(std::abs(sx(0, 1) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(sx(0, 0)) < 1e-12);

  // missing ranks pad the spectrum with zeros
  const std::vector<Event> partial{Event::basis(3, 1)};
  const std::vector<double> coeff{5.0};
  const HermitianMatrix m = observable_from_spectrum(coeff, partial);
  CHECK(m(0, 0) == Complex(0, 0));
  CHECK(m(1, 1) == Complex(5, 0));

  const std::vector<Event> overlapping{Event::basis(2, 0), plus_ray()};
  CHECK_THROWS_AS(observable_from_spectrum(pm, overlapping), std::invalid_argument);
}

TEST_CASE("observable spectrum round-trips through the eigensolver") {
  Stream g(34);
  for (int trial = 0; trial < 50; ++trial) {
    const std::array<std::size_t, 3> ranks{1, 2, 1};
    const auto events = random_orthogonal_events(4, ranks, g);
    const std::vector<double> coeffs{3.0, -1.0, 0.5};
    const HermitianMatrix obs = observable_from_spectrum(coeffs, events);

    const EigResult eig = hermitian_eig(obs);
    const std::vector<double> want{3.0, 0.5, -1.0, -1.0};
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(eig.values[k] - want[k]) < 1e-10);
  }
}

TEST_CASE("compatibility") {
  const HermitianMatrix sz(ComplexMatrix::from_rows({{1, 0}, {0, -1}}));
  const HermitianMatrix sx(ComplexMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(compatible(sz, sz));
  CHECK(!compatible(sz, sx));

  Stream g(35);
  const HermitianMatrix a = random_hermitian(2, g);
  const HermitianMatrix b = random_hermitian(3, g);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix id3 = ComplexMatrix::identity(3);
  const HermitianMatrix left(kron(a.matrix(), id3));
  const HermitianMatrix right(kron(id2, b.matrix()));
  CHECK(compatible(left, right));
}

TEST_CASE("state validation") {
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(State{HermitianMatrix(id2)}, std::invalid_argument);

  ComplexMatrix neg(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(State{HermitianMatrix(neg)}, std::invalid_argument);

  const State mixed = State::maximally_mixed(3);
  CHECK(mixed.rho()(0, 0) == Complex(1.0 / 3.0, 0.0));
}
