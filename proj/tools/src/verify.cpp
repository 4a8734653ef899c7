// Copyright 2026 The Tuttice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tuttice/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <utility>

#include "tuttice/activity.hpp"
#include "tuttice/error.hpp"
#include "tuttice/lattice.hpp"
#include "tuttice/qpoly.hpp"
#include "tuttice/subdivision.hpp"
#include "tuttice/tutte.hpp"

namespace tuttice {
namespace {

// Size limits above which a check is skipped rather than run.
constexpr int kMaxDegreeGrid = 7;
constexpr int kMaxStructural = 6;
constexpr int kMaxDirectSumFactor = 4;
constexpr int kMaxSeries = 8;
constexpr int kMaxCoverage = 6;
constexpr int kMaxIntersection = 5;

// Outcome of a check body: nullopt is a pass, a string is a failure witness.
using Outcome = std::optional<std::string>;

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  void run(std::string name, std::string statement,
           const std::function<Outcome()>& body) {
    CheckResult r{std::move(name), std::move(statement), CheckStatus::kPass, ""};
    try {
      if (Outcome witness = body()) {
        r.status = CheckStatus::kFail;
        r.detail = std::move(*witness);
      }
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.detail = e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  // Evaluated for the record only: a failure is reported as info.
  void info(std::string name, std::string statement, std::string reason,
            const std::function<Outcome()>& body) {
    run(std::move(name), std::move(statement), body);
    CheckResult& r = report_.checks.back();
    const bool held = r.status == CheckStatus::kPass;
    r.status = CheckStatus::kInfo;
    r.detail = (held ? "holds; " : "does not hold (" + r.detail + "); ") + reason;
  }

  void skip(std::string name, std::string statement, std::string reason) {
    report_.checks.push_back(
        {std::move(name), std::move(statement), CheckStatus::kSkip, std::move(reason)});
  }

 private:
  VerificationReport& report_;
};

Outcome expect_equal(const BivarPoly& lhs, const BivarPoly& rhs,
                     const std::string& lhs_name, const std::string& rhs_name) {
  if (lhs == rhs) return std::nullopt;
  return lhs_name + " = " + to_pretty(lhs) + " but " + rhs_name + " = " +
         to_pretty(rhs);
}

// xi^{n-1} Q'(1/xi, 1) (first variable) or eta^{n-1} Q'(1, 1/eta), as a
// polynomial in x; nullopt when a term has degree above n-1.
std::optional<BivarPoly> reciprocal_specialization(const BivarPoly& q, int n,
                                                   bool first) {
  BivarPoly out;
  for (const auto& [e, c] : q.terms()) {
    const int k = first ? e.i : e.j;
    if (k > n - 1) return std::nullopt;
    out.add_term(n - 1 - k, 0, c);
  }
  return out;
}

bool is_connected(const Polymatroid& m) {
  for (Subset s = 1; s < m.ground(); ++s) {
    if (m.rank(s) + m.rank(m.ground() & ~s) == m.rank()) return false;
  }
  return true;
}

ElementOrder shuffled_order(int n) {
  std::vector<int> seq(n);
  for (int k = 0; k < n; ++k) seq[k] = k;
  std::mt19937 rng(static_cast<std::uint32_t>(n) * 7919U + 17U);
  std::shuffle(seq.begin(), seq.end(), rng);
  return ElementOrder::from_sequence(std::move(seq));
}

std::string size_reason(int limit) {
  return "skipped for more than " + std::to_string(limit) + " elements";
}

}  // namespace

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
    case CheckStatus::kInfo: return "info";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

VerificationReport verify(const Polymatroid& m, const VerifyOptions& options) {
  VerificationReport report;
  Runner check(report);
  const int n = m.size();
  const int r = m.rank();
  const bool matroid = m.is_matroid();
  const bool full = options.level == VerifyLevel::kFull;
  const std::string matroid_only = "requires a matroid";

  check.run("axioms", "the rank table is normalized, monotone and submodular",
            [&]() -> Outcome {
              const std::vector<int> table(m.table().begin(), m.table().end());
              make_polymatroid(n, table);
              return std::nullopt;
            });

  check.run("base_count", "Q(0,0) equals the number of integer bases",
            [&]() -> Outcome {
              const Count q00 = count_lattice_points(m, 0, 0);
              const auto bases = static_cast<Count>(enumerate_bases(m).size());
              if (q00 == bases) return std::nullopt;
              return "Q(0,0) = " + std::to_string(q00) + ", bases = " +
                     std::to_string(bases);
            });

  const std::string degree_statement =
      "Q(t,u) on 0 <= t,u <= n-1 is a polynomial of total degree <= n-1";
  if (n <= kMaxDegreeGrid) {
    check.run("degree_bound", degree_statement, [&]() -> Outcome {
      const BinomialForm checked = binomial_form_checked(m);
      if (checked == binomial_form(m)) return std::nullopt;
      return std::string("full-grid and triangle interpolations differ");
    });
  } else {
    check.skip("degree_bound", degree_statement, size_reason(kMaxDegreeGrid));
  }

  const BivarPoly q = qprime(m);

  check.run("internal_activity_identity",
            "I(xi) = xi^(n-1) Q'(1/xi, 1)", [&]() -> Outcome {
              const auto rhs = reciprocal_specialization(q, n, true);
              if (!rhs) return std::string("Q' has x-degree above n-1");
              return expect_equal(internal_polynomial(m), *rhs, "I",
                                  "xi^(n-1) Q'(1/xi,1)");
            });
  check.run("external_activity_identity",
            "X(eta) = eta^(n-1) Q'(1, 1/eta)", [&]() -> Outcome {
              const auto rhs = reciprocal_specialization(q, n, false);
              if (!rhs) return std::string("Q' has y-degree above n-1");
              return expect_equal(external_polynomial(m), *rhs, "X",
                                  "eta^(n-1) Q'(1,1/eta)");
            });
  check.run("activity_order_independence",
            "I and X are the same under natural, reversed and shuffled orders",
            [&]() -> Outcome {
              const BivarPoly i0 = internal_polynomial(m);
              const BivarPoly x0 = external_polynomial(m);
              for (const ElementOrder& o :
                   {ElementOrder::reversed(n), shuffled_order(n)}) {
                if (auto w = expect_equal(internal_polynomial(m, o), i0,
                                          "I(other order)", "I(natural)")) {
                  return w;
                }
                if (auto w = expect_equal(external_polynomial(m, o), x0,
                                          "X(other order)", "X(natural)")) {
                  return w;
                }
              }
              return std::nullopt;
            });

  // Matroid identities.
  std::optional<BivarPoly> tutte;
  if (matroid) tutte = tutte_corank_nullity(m);
  const auto matroid_check = [&](std::string name, std::string statement,
                                 const std::function<Outcome()>& body) {
    if (matroid) {
      check.run(std::move(name), std::move(statement), body);
    } else {
      check.skip(std::move(name), std::move(statement), matroid_only);
    }
  };

  matroid_check("tutte_from_qprime",
                "converting Q' gives the corank-nullity Tutte polynomial",
                [&]() -> Outcome {
                  return expect_equal(tutte_from_qprime(n, r, q), *tutte,
                                      "T(from Q')", "T(corank-nullity)");
                });
  matroid_check("qprime_from_tutte",
                "converting the Tutte polynomial gives Q'", [&]() -> Outcome {
                  return expect_equal(qprime_from_tutte(n, r, *tutte), q,
                                      "Q'(from T)", "Q'(lattice)");
                });
  matroid_check("tutte_from_activities",
                "sum over bases of x^|Int(B)| y^|Ext(B)| is the Tutte polynomial",
                [&]() -> Outcome {
                  return expect_equal(tutte_from_activities(m), *tutte,
                                      "T(activities)", "T(corank-nullity)");
                });
  const std::string series_statement =
      "sum Q(t,u) v^t w^u matches the Tutte-side power series to order " +
      std::to_string(options.series_order);
  if (n <= kMaxSeries) {
    matroid_check("series_identity", series_statement, [&]() -> Outcome {
      const SeriesReport s = series_identity_check(m, options.series_order);
      if (s.matches()) return std::nullopt;
      const SeriesMismatch& mm = *s.first_mismatch;
      return "coefficient of v^" + std::to_string(mm.t) + " w^" +
             std::to_string(mm.u) + ": " + mm.lattice_side.str() + " vs " +
             mm.tutte_side.str();
    });
  } else {
    check.skip("series_identity", series_statement, size_reason(kMaxSeries));
  }
  matroid_check("top_degree_shape", "the degree n-1 part of Q' is (x+y)^(n-1)",
                [&]() -> Outcome {
                  return expect_equal(q.homogeneous_part(n - 1),
                                      pow(BivarPoly::x() + BivarPoly::y(), n - 1),
                                      "top part", "(x+y)^(n-1)");
                });
  const std::string sign_statement =
      "the sign of [x^i y^j] Q' is (-1)^((n-1)-(i+j))";
  const auto sign_body = [&]() -> Outcome {
    if (sign_alternation_check(q, n)) return std::nullopt;
    return "Q' = " + to_pretty(q);
  };
  if (matroid) {
    check.run("sign_alternation", sign_statement, sign_body);
  } else {
    check.info("sign_alternation", sign_statement,
               "alternation is only guaranteed for matroids", sign_body);
  }
  if (matroid && n >= 2) {
    if (is_connected(m)) {
      check.run("beta_symmetry",
                "for a connected matroid [x]T = [y]T", [&]() -> Outcome {
                  const Integer a = coefficient(*tutte, 1, 0);
                  const Integer b = coefficient(*tutte, 0, 1);
                  if (a == b) return std::nullopt;
                  return "[x]T = " + a.str() + ", [y]T = " + b.str();
                });
    } else {
      check.skip("beta_symmetry", "for a connected matroid [x]T = [y]T",
                 "matroid is not connected");
    }
  }

  // Subdivision.
  matroid_check("top_degree_faces",
                "each of the 2^(n-1) partitions has exactly one basis passing "
                "the activity condition, at the lifted vertex",
                [&]() -> Outcome {
                  const auto faces = top_degree_faces(m);
                  if (faces.size() != (std::size_t{1} << (n - 1))) {
                    return std::to_string(faces.size()) + " faces";
                  }
                  for (const TopDegreeFace& f : faces) {
                    if (f.vertex != top_degree_vertex(m, f.partition)) {
                      return "basis {" + subset_key(f.basis, n) +
                             "} is not the lifted vertex for X={" +
                             subset_key(f.partition.x, n) + "}";
                    }
                  }
                  return std::nullopt;
                });
  matroid_check("dawson_partition",
                "the intervals [B - Int(B), B + Ext(B)] partition the power set "
                "in increasing order",
                [&]() -> Outcome {
                  const DawsonValidation v =
                      validate_dawson_partition(dawson_partition(m), n);
                  if (v.ok()) return std::nullopt;
                  return v.witness;
                });
  matroid_check("coefficient_interpretation",
                "cells of the face poset counted by dimension give |[x^a y^b] "
                "Q'|, and the poset is a union of cubes, one per Dawson interval",
                [&]() -> Outcome {
                  const FacePoset poset = face_poset(m);
                  if (!poset.cubes_match_dawson) return poset.witness;
                  for (const CoefficientEntry& e : coefficient_check(m).entries) {
                    if (!e.matches) {
                      return "x^" + std::to_string(e.i) + " y^" +
                             std::to_string(e.j) + ": " +
                             std::to_string(e.poset_count) + " cells, coefficient " +
                             e.coefficient.str();
                    }
                  }
                  return std::nullopt;
                });

  const std::string coverage_statement =
      "every lattice point of the sum at (t,u) = (1,1), (2,1) lies in a top "
      "degree face";
  if (!full) {
    check.skip("coverage", coverage_statement, "full level only");
  } else if (n > kMaxCoverage) {
    check.skip("coverage", coverage_statement, size_reason(kMaxCoverage));
  } else {
    const auto body = [&]() -> Outcome {
      for (const auto& [t, u] : {std::pair{1, 1}, std::pair{2, 1}}) {
        const CoverageReport c = coverage_check(m, t, u);
        if (!c.complete()) {
          return std::to_string(c.points - c.covered) + " of " +
                 std::to_string(c.points) + " points uncovered at (t,u)=(" +
                 std::to_string(t) + "," + std::to_string(u) + ")";
        }
      }
      return std::nullopt;
    };
    if (matroid) {
      check.run("coverage", coverage_statement, body);
    } else {
      check.info("coverage", coverage_statement,
                 "coverage is only guaranteed for matroids", body);
    }
  }
  const std::string shared_statement =
      "intersecting top degree faces share their basis";
  const std::string interp_statement =
      "faces between two intersecting faces contain their common points";
  if (!full) {
    check.skip("shared_basis", shared_statement, "full level only");
    check.skip("interpolation", interp_statement, "full level only");
  } else if (n > kMaxIntersection) {
    check.skip("shared_basis", shared_statement, size_reason(kMaxIntersection));
    check.skip("interpolation", interp_statement, size_reason(kMaxIntersection));
  } else {
    const auto report_of = [](const IntersectionReport& x) -> Outcome {
      if (x.ok()) return std::nullopt;
      return std::to_string(x.violations) + " violations; " + x.witness;
    };
    matroid_check("shared_basis", shared_statement, [&]() -> Outcome {
      for (const auto& [t, u] : {std::pair{1, 1}, std::pair{2, 1}}) {
        if (auto w = report_of(shared_basis_check(m, t, u))) return w;
      }
      return std::nullopt;
    });
    matroid_check("interpolation", interp_statement, [&]() -> Outcome {
      for (const auto& [t, u] : {std::pair{1, 1}, std::pair{2, 1}}) {
        if (auto w = report_of(interpolation_check(m, t, u))) return w;
      }
      return std::nullopt;
    });
  }

  // Structural identities.
  const std::string dual_statement = "Q'(s-dual) (x,y) = Q'(y,x)";
  const std::string loop_statement =
      "adding a loop or a coloop multiplies Q' by (x+y-1)";
  const std::string sum_statement = "Q'(M + M) = (x+y-1) Q'(M)^2";
  const std::string relax_statement =
      "relaxing a circuit-hyperplane adds x^(n-r-1) y^(r-1) to Q'";
  if (n <= kMaxStructural) {
    check.run("duality", dual_statement, [&]() -> Outcome {
      const int s = std::max(1, m.max_singleton_rank());
      return expect_equal(qprime(s_dual(m, s)), q.swapped(), "Q'(dual)",
                          "Q'(y,x)");
    });
    check.run("loop_coloop", loop_statement, [&]() -> Outcome {
      const BivarPoly factor = BivarPoly::x() + BivarPoly::y() - 1;
      if (auto w = expect_equal(qprime(add_loop(m)), factor * q, "Q'(M+loop)",
                                "(x+y-1)Q'(M)")) {
        return w;
      }
      return expect_equal(qprime(add_coloop(m)), factor * q, "Q'(M+coloop)",
                          "(x+y-1)Q'(M)");
    });
    if (n <= kMaxDirectSumFactor) {
      check.run("direct_sum", sum_statement, [&]() -> Outcome {
        const BivarPoly factor = BivarPoly::x() + BivarPoly::y() - 1;
        return expect_equal(qprime(direct_sum(m, m)), factor * q * q,
                            "Q'(M+M)", "(x+y-1)Q'(M)^2");
      });
    } else {
      check.skip("direct_sum", sum_statement, size_reason(kMaxDirectSumFactor));
    }
    const std::vector<Subset> hyperplanes =
        matroid ? circuit_hyperplanes(m) : std::vector<Subset>{};
    if (!matroid) {
      check.skip("relaxation", relax_statement, matroid_only);
    } else if (hyperplanes.empty()) {
      check.skip("relaxation", relax_statement, "no circuit-hyperplane");
    } else {
      check.run("relaxation", relax_statement, [&]() -> Outcome {
        for (Subset c : hyperplanes) {
          const BivarPoly relaxed = qprime(relax_circuit_hyperplane(m, c));
          const BivarPoly diff = BivarPoly::monomial(1, n - r - 1, r - 1);
          if (auto w = expect_equal(q, relaxed - diff, "Q'(M)",
                                    "Q'(relaxed) - x^(n-r-1) y^(r-1)")) {
            return "C={" + subset_key(c, n) + "}: " + *w;
          }
        }
        return std::nullopt;
      });
    }
  } else {
    for (const auto& [name, statement] :
         {std::pair{"duality", dual_statement}, {"loop_coloop", loop_statement},
          {"direct_sum", sum_statement}, {"relaxation", relax_statement}}) {
      check.skip(name, statement, size_reason(kMaxStructural));
    }
  }
  return report;
}

}  // namespace tuttice
