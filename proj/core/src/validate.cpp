#include <algorithm>
#include <sstream>

#include "tabalg/table.hpp"

namespace tabalg {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::StarInvolution: return "star-involution";
    case Axiom::Identity: return "identity";
    case Axiom::RealConstants: return "real-constants";
    case Axiom::StarAntiAutomorphism: return "star-anti-automorphism";
    case Axiom::UnitCoefficient: return "unit-coefficient";
    case Axiom::DegreeHomomorphism: return "degree-homomorphism";
    case Axiom::Associativity: return "associativity";
  }
  return "unknown";
}

bool ValidationReport::violates(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const Violation& v) { return v.axiom == axiom; });
}

namespace {

std::string mismatch(const Scalar& got, const Scalar& want) {
  return "got " + got.str() + ", expected " + want.str();
}

}  // namespace

ValidationReport validate(const StructureConstantTable& t, double tol) {
  ValidationReport report;
  auto add = [&](Axiom axiom, std::vector<BasisIndex> witness, std::string detail) {
    report.violations.push_back({axiom, std::move(witness), std::move(detail)});
  };
  const std::size_t n = t.rank();

  // Star must be an involution fixing the identity.
  if (t.star(0) != 0) add(Axiom::StarInvolution, {0}, "identity is not self-adjoint");
  for (BasisIndex i = 0; i < n; ++i) {
    if (t.star(t.star(i)) != i) add(Axiom::StarInvolution, {i}, "star(star(i)) != i");
  }

  // Identity row and column.
  for (BasisIndex b = 0; b < n; ++b) {
    for (BasisIndex c = 0; c < n; ++c) {
      Scalar want = (b == c) ? 1 : 0;
      if (!near(t.lambda(0, b, c), want, tol)) {
        add(Axiom::Identity, {0, b, c}, "lambda(1," + t.label(b) + "," + t.label(c) + ") " +
                                            mismatch(t.lambda(0, b, c), want));
      }
      if (!near(t.lambda(b, 0, c), want, tol)) {
        add(Axiom::Identity, {b, 0, c}, "lambda(" + t.label(b) + ",1," + t.label(c) + ") " +
                                            mismatch(t.lambda(b, 0, c), want));
      }
    }
  }

  for (BasisIndex a = 0; a < n; ++a)
    for (BasisIndex b = 0; b < n; ++b)
      for (const Term& term : t.product(a, b))
        if (!term.value.is_real(tol)) {
          add(Axiom::RealConstants, {a, b, term.index}, "non-real constant " + term.value.str());
        }

  // lambda(a*, b*, c*) = lambda(b, a, c)
  for (BasisIndex a = 0; a < n; ++a) {
    for (BasisIndex b = 0; b < n; ++b) {
      for (BasisIndex c = 0; c < n; ++c) {
        const Scalar& lhs = t.lambda(t.star(a), t.star(b), t.star(c));
        const Scalar& rhs = t.lambda(b, a, c);
        if (!near(lhs, rhs.conj(), tol)) {
          add(Axiom::StarAntiAutomorphism, {a, b, c},
              "lambda(a*,b*,c*) = " + lhs.str() + " but lambda(b,a,c) = " + rhs.str());
        }
      }
    }
  }

  // lambda(a, b, 1) = delta(a, b*) |a| with |a| > 0
  for (BasisIndex a = 0; a < n; ++a) {
    if (!t.degree(a).is_positive(tol)) {
      add(Axiom::UnitCoefficient, {a}, "degree of " + t.label(a) + " is " + t.degree(a).str());
    }
    for (BasisIndex b = 0; b < n; ++b) {
      Scalar want = (b == t.star(a)) ? t.degree(a) : Scalar(0);
      if (!near(t.lambda(a, b, 0), want, tol)) {
        add(Axiom::UnitCoefficient, {a, b},
            "lambda(" + t.label(a) + "," + t.label(b) + ",1) " + mismatch(t.lambda(a, b, 0), want));
      }
    }
  }

  // Degree map is a one-dimensional *-representation.
  for (BasisIndex b = 0; b < n; ++b) {
    if (!near(t.degree(b), t.degree(t.star(b)), tol)) {
      add(Axiom::DegreeHomomorphism, {b, t.star(b)}, "|b| != |b*|");
    }
  }
  for (BasisIndex a = 0; a < n; ++a) {
    for (BasisIndex b = 0; b < n; ++b) {
      Scalar sum = 0;
      for (const Term& term : t.product(a, b)) sum += term.value * t.degree(term.index);
      Scalar want = t.degree(a) * t.degree(b);
      if (!near(sum, want, tol)) {
        add(Axiom::DegreeHomomorphism, {a, b},
            "sum_c lambda(" + t.label(a) + "," + t.label(b) + ",c)|c| " + mismatch(sum, want));
      }
    }
  }

  // (ab)c = a(bc) on basis triples.
  std::vector<Scalar> left(n), right(n);
  for (BasisIndex a = 0; a < n; ++a) {
    for (BasisIndex b = 0; b < n; ++b) {
      for (BasisIndex c = 0; c < n; ++c) {
        std::fill(left.begin(), left.end(), Scalar(0));
        std::fill(right.begin(), right.end(), Scalar(0));
        for (const Term& ab : t.product(a, b))
          for (const Term& abc : t.product(ab.index, c)) left[abc.index] += ab.value * abc.value;
        for (const Term& bc : t.product(b, c))
          for (const Term& abc : t.product(a, bc.index)) right[abc.index] += bc.value * abc.value;
        for (BasisIndex d = 0; d < n; ++d) {
          if (!near(left[d], right[d], tol)) {
            std::ostringstream os;
            os << "((" << t.label(a) << ")(" << t.label(b) << "))(" << t.label(c)
               << ") and (" << t.label(a) << ")((" << t.label(b) << ")(" << t.label(c)
               << ")) differ at " << t.label(d) << ": " << left[d].str() << " vs "
               << right[d].str();
            add(Axiom::Associativity, {a, b, c, d}, os.str());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace tabalg
