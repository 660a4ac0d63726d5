#include "powcom/theorems.hpp"

#include <map>

#include "powcom/arith.hpp"
#include "powcom/error.hpp"
#include "powcom/isomorphism.hpp"

namespace powcom {

namespace {

Element power_u(const FiniteGroup& g, Element a, std::uint64_t k) {
  Element result = kIdentity;
  while (k != 0) {
    if (k & 1U) result = g.mul(result, a);
    a = g.mul(a, a);
    k >>= 1U;
  }
  return result;
}

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorKind::PreconditionFailed, what);
}

std::string witness_text(const PowerWitness& w) {
  return "a=" + std::to_string(w.a) + " b=" + std::to_string(w.b) + " exponent " +
         std::to_string(w.exponent);
}

// The hypothesis shared by the torsion verifiers: coprime (m, n) and the
// group satisfies both power laws.
void require_property(const FiniteGroup& g, std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) precondition("exponents must be positive");
  if (!arith::coprime(m, n)) {
    precondition("m = " + std::to_string(m) + " and n = " + std::to_string(n) + " are not coprime");
  }
  const PropertyReport report = satisfies_p(g, m, n);
  if (!report.satisfies_p) {
    precondition("group " + g.name() + " does not satisfy the power laws for (" +
                 std::to_string(m) + ", " + std::to_string(n) + "): " +
                 witness_text(*report.witness));
  }
}

std::optional<Violation> subgroup_violation(const FiniteGroup& g, const TorsionSet& h) {
  if (!h.closed()) {
    return Violation{{h.escape->first, h.escape->second}, "product escapes the k-torsion set"};
  }
  const auto elements = h.members.elements();
  if (!h.members.is_abelian()) {
    for (Element x : elements) {
      for (Element y : elements) {
        if (g.mul(x, y) != g.mul(y, x)) return Violation{{x, y}, "k-torsion set is not abelian"};
      }
    }
  }
  if (!h.members.is_normal()) {
    for (Element c = 0; c < g.order(); ++c) {
      for (Element x : elements) {
        if (!h.members.contains(g.mul(g.mul(c, x), g.inverse(c)))) {
          return Violation{{c, x}, "k-torsion set is not normal"};
        }
      }
    }
  }
  return std::nullopt;
}

void require_prime_divisor(const FiniteGroup& g, std::uint64_t p) {
  if (!arith::is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (g.order() % p != 0) {
    throw Error(ErrorKind::PrimeDoesNotDivideOrder,
                std::to_string(p) + " does not divide " + std::to_string(g.order()));
  }
}

std::uint64_t sylow_order(const FiniteGroup& g, std::uint64_t p) {
  for (const auto& f : arith::factorize(g.order()).factors) {
    if (f.prime == p) return f.value();
  }
  return 1;
}

}  // namespace

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Vacuous: return "vacuous";
    case VerdictStatus::Violated: return "violated";
  }
  return "unknown";
}

TorsionSet k_torsion_set(const FiniteGroup& g, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x) {
    if (power_u(g, x, k) == kIdentity) members.push_back(x);
  }
  TorsionSet result{k, SubgroupSet(g, members), std::nullopt};
  if (!result.closed()) {
    for (Element x : members) {
      for (Element y : members) {
        if (!result.members.contains(g.mul(x, y))) {
          result.escape = std::make_pair(x, y);
          return result;
        }
      }
    }
  }
  return result;
}

Verdict<TorsionSet> verify_torsion_subgroup(const FiniteGroup& g, std::uint64_t k, std::uint64_t m,
                                            std::uint64_t n) {
  if (k == 0) precondition("k must be positive");
  if (!arith::coprime(k, m) && !arith::coprime(k, n)) {
    precondition("k = " + std::to_string(k) + " is coprime to neither m = " + std::to_string(m) +
                 " nor n = " + std::to_string(n));
  }
  require_property(g, m, n);
  TorsionSet h = k_torsion_set(g, k);
  auto violation = subgroup_violation(g, h);
  const VerdictStatus status = violation ? VerdictStatus::Violated : VerdictStatus::Holds;
  return {"k-torsion set is a normal abelian subgroup", status, std::move(h), std::move(violation)};
}

TorsionSet sylow_set(const FiniteGroup& g, std::uint64_t p) {
  require_prime_divisor(g, p);
  return k_torsion_set(g, sylow_order(g, p));
}

std::vector<SubgroupSet> find_sylow_subgroups(const FiniteGroup& g, std::uint64_t p,
                                              const Limits& limits) {
  require_prime_divisor(g, p);
  const std::uint64_t target = sylow_order(g, p);
  std::vector<SubgroupSet> out;
  for (auto& h : all_subgroups(g, limits)) {
    if (h.size() == target) out.push_back(std::move(h));
  }
  return out;
}

Verdict<SylowEvidence> verify_sylow_criterion(const FiniteGroup& g, std::uint64_t p,
                                              const Limits& limits) {
  SylowEvidence evidence{sylow_set(g, p), find_sylow_subgroups(g, p, limits)};
  Verdict<SylowEvidence> verdict{"p-power set is a subgroup iff the Sylow p-subgroup is unique",
                                 VerdictStatus::Holds, std::move(evidence), std::nullopt};
  const auto& ev = verdict.evidence;
  const bool is_subgroup = ev.power_set.closed();
  const bool unique = ev.sylow_subgroups.size() == 1;
  if (ev.sylow_subgroups.empty()) {
    verdict.status = VerdictStatus::Violated;
    verdict.violation = Violation{{}, "no subgroup of maximal p-power order found"};
  } else if (is_subgroup != unique) {
    verdict.status = VerdictStatus::Violated;
    verdict.violation = Violation{
        {}, is_subgroup ? "p-power set is a subgroup but the Sylow p-subgroup is not unique"
                        : "Sylow p-subgroup is unique but the p-power set is not a subgroup"};
  } else if (unique && !(ev.power_set.members == ev.sylow_subgroups.front())) {
    verdict.status = VerdictStatus::Violated;
    verdict.violation = Violation{{}, "unique Sylow p-subgroup differs from the p-power set"};
  }
  return verdict;
}

Verdict<DirectProductEvidence> verify_abelian_decomposition(const FiniteGroup& g, std::uint64_t m,
                                                            std::uint64_t n, const Limits& limits) {
  Verdict<DirectProductEvidence> verdict{"finite group with commuting m-th and n-th powers is abelian",
                                         VerdictStatus::Holds, {satisfies_p(g, m, n), {}, false, false},
                                         std::nullopt};
  auto& ev = verdict.evidence;
  if (!ev.report.satisfies_p) {
    verdict.status = VerdictStatus::Vacuous;
    const PowerWitness& w = *ev.report.witness;
    verdict.violation = Violation{{w.a, w.b}, "powers of exponent " + std::to_string(w.exponent) +
                                                  " do not commute"};
    return verdict;
  }
  if (const auto pair = noncommuting_pair(g)) {
    verdict.status = VerdictStatus::Violated;
    verdict.violation = Violation{{pair->a, pair->b}, "group satisfies the power laws but is not abelian"};
    return verdict;
  }

  for (const std::uint64_t p : arith::factorize(g.order()).primes()) {
    auto sylow = verify_sylow_criterion(g, p, limits);
    if (!sylow.holds() || !sylow.evidence.power_set.closed()) {
      verdict.status = VerdictStatus::Violated;
      verdict.violation = Violation{{static_cast<Element>(p)}, "no unique Sylow subgroup for this prime"};
      return verdict;
    }
    ev.sylow_factors.push_back(std::move(sylow.evidence.sylow_subgroups.front()));
  }

  // Walk all tuples (x_1, ..., x_r) in mixed radix and multiply out.
  const std::size_t r = ev.sylow_factors.size();
  std::size_t tuples = 1;
  for (const auto& f : ev.sylow_factors) tuples *= f.size();
  std::vector<std::vector<Element>> components(tuples, std::vector<Element>(r));
  std::vector<Element> image(tuples);
  std::vector<bool> hit(g.order(), false);
  bool bijective = tuples == g.order();
  for (std::size_t t = 0; t < tuples && bijective; ++t) {
    std::size_t rest = t;
    Element product = kIdentity;
    for (std::size_t i = r; i-- > 0;) {
      const auto elements = ev.sylow_factors[i].elements();
      components[t][i] = elements[rest % elements.size()];
      rest /= elements.size();
    }
    for (std::size_t i = 0; i < r; ++i) product = g.mul(product, components[t][i]);
    image[t] = product;
    if (hit[product]) bijective = false;
    hit[product] = true;
  }
  bool homomorphism = bijective;
  if (homomorphism) {
    // Index the image so the componentwise product maps back to a tuple.
    std::vector<std::size_t> tuple_of(g.order());
    for (std::size_t t = 0; t < tuples; ++t) tuple_of[image[t]] = t;
    for (std::size_t s = 0; s < tuples && homomorphism; ++s) {
      for (std::size_t t = 0; t < tuples && homomorphism; ++t) {
        Element product = kIdentity;
        for (std::size_t i = 0; i < r; ++i) {
          product = g.mul(product, g.mul(components[s][i], components[t][i]));
        }
        homomorphism = product == g.mul(image[s], image[t]);
      }
    }
  }
  ev.internal_map_is_isomorphism = bijective && homomorphism;

  FiniteGroup external = FiniteGroup::from_valid_table(1, {kIdentity}, "C1");
  for (const auto& f : ev.sylow_factors) external = direct_product(external, subgroup_as_group(f), limits);
  Limits iso_limits = limits;
  iso_limits.lattice_cap = std::max(limits.lattice_cap, g.order());
  ev.external_product_isomorphic = are_isomorphic(g, external, iso_limits);

  if (!ev.internal_map_is_isomorphism || !ev.external_product_isomorphic) {
    verdict.status = VerdictStatus::Violated;
    verdict.violation = Violation{{}, "Sylow subgroups do not rebuild the group as a direct product"};
  }
  return verdict;
}

TorsionDecomposition torsion_decompose(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw Error(ErrorKind::InvalidArgument, "element outside the group");
  TorsionDecomposition d{x, element_order(g, x), {}};
  if (d.order == 1) return d;
  const auto factorization = arith::factorize(d.order);
  std::vector<std::uint64_t> cofactors;
  for (const auto& f : factorization.factors) cofactors.push_back(d.order / f.value());
  const auto cert = arith::multi_bezout(cofactors);
  for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
    const auto& f = factorization.factors[i];
    d.parts.push_back({power_u(g, x, cofactors[i]), f.prime, f.exponent, f.value(), cofactors[i],
                       cert.coefficients[i]});
  }
  return d;
}

std::optional<std::string> check_decomposition(const FiniteGroup& g, const TorsionDecomposition& d) {
  if (d.order != element_order(g, d.element)) return "recorded order is not the element order";
  if (d.order == 1) {
    if (!d.parts.empty()) return "identity has parts";
    return d.element == kIdentity ? std::nullopt : std::optional<std::string>("order 1 but not identity");
  }
  arith::BezoutCertificate cert;
  std::uint64_t product_of_powers = 1;
  Element rebuilt = kIdentity;
  for (const auto& part : d.parts) {
    if (!arith::is_prime(part.prime)) return "part prime " + std::to_string(part.prime) + " is not prime";
    if (arith::PrimePower{part.prime, part.exponent}.value() != part.prime_power) {
      return "prime power mismatch";
    }
    if (element_order(g, part.part) != part.prime_power) {
      return "part " + std::to_string(part.part) + " does not have order " +
             std::to_string(part.prime_power);
    }
    if (part.cofactor * part.prime_power != d.order) return "cofactor is not order / prime power";
    if (power_u(g, d.element, part.cofactor) != part.part) return "part is not x^cofactor";
    cert.inputs.push_back(part.cofactor);
    cert.coefficients.push_back(part.coefficient);
    product_of_powers *= part.prime_power;
    rebuilt = g.mul(rebuilt, power(g, part.part, part.coefficient));
  }
  if (product_of_powers != d.order) return "prime powers do not multiply to the order";
  cert.gcd = 1;
  if (!cert.verify()) return "Bezout certificate does not sum to 1";
  if (rebuilt != d.element) return "parts do not multiply back to the element";
  for (const auto& p1 : d.parts) {
    for (const auto& p2 : d.parts) {
      if (g.mul(p1.part, p2.part) != g.mul(p2.part, p1.part)) return "parts do not commute";
    }
  }
  return std::nullopt;
}

Verdict<TorsionCommutingEvidence> verify_torsion_commuting(const FiniteGroup& g, std::uint64_t m,
                                                           std::uint64_t n) {
  require_property(g, m, n);
  Verdict<TorsionCommutingEvidence> verdict{"elements of prime-power order commute",
                                            VerdictStatus::Holds, {}, std::nullopt};
  auto& ev = verdict.evidence;

  struct PrimePowerElement {
    Element x;
    std::uint64_t prime;
    std::uint64_t order;
  };
  std::vector<PrimePowerElement> elements;
  for (Element x = 1; x < g.order(); ++x) {
    const std::uint64_t o = element_order(g, x);
    const auto f = arith::factorize(o);
    if (f.factors.size() == 1) elements.push_back({x, f.factors.front().prime, o});
  }

  std::map<std::uint64_t, TorsionSet> cache;
  auto torsion = [&](std::uint64_t k) -> const TorsionSet& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, k_torsion_set(g, k)).first;
    return it->second;
  };
  auto fail = [&](Element a, Element b, std::string why) {
    verdict.status = VerdictStatus::Violated;
    verdict.violation = Violation{{a, b}, std::move(why)};
  };

  for (std::size_t i = 0; i < elements.size() && verdict.holds(); ++i) {
    for (std::size_t j = i + 1; j < elements.size() && verdict.holds(); ++j) {
      const auto& a = elements[i];
      const auto& b = elements[j];
      ++ev.pairs;
      const std::uint64_t s = a.order * b.order;
      if (arith::coprime(s, m) || arith::coprime(s, n)) {
        const TorsionSet& h = torsion(s);
        if (!h.closed() || !h.members.is_abelian() || !h.members.contains(a.x) ||
            !h.members.contains(b.x)) {
          fail(a.x, b.x, "s-torsion set is not an abelian subgroup containing both");
          break;
        }
        ++ev.single_subgroup_route;
      } else {
        if (a.prime == b.prime) {
          fail(a.x, b.x, "same prime yet s shares a factor with both m and n");
          break;
        }
        // Orient so the first element's prime divides m.
        const bool a_on_m = m % a.prime == 0;
        const auto& pm = a_on_m ? a : b;
        const auto& pn = a_on_m ? b : a;
        if (m % pm.prime != 0 || n % pn.prime != 0) {
          fail(a.x, b.x, "primes do not split across m and n");
          break;
        }
        const TorsionSet& sa = torsion(pm.order);
        const TorsionSet& sb = torsion(pn.order);
        bool trivial_meet = true;
        for (Element x : sa.members.elements()) {
          if (x != kIdentity && sb.members.contains(x)) trivial_meet = false;
        }
        if (!sa.closed() || !sb.closed() || !sa.members.is_normal() || !sb.members.is_normal() ||
            !sa.members.is_abelian() || !sb.members.is_abelian() || !trivial_meet ||
            !sa.members.contains(pm.x) || !sb.members.contains(pn.x)) {
          fail(a.x, b.x, "split route subgroups are not normal abelian with trivial intersection");
          break;
        }
        ++ev.split_route;
      }
      if (g.mul(a.x, b.x) != g.mul(b.x, a.x)) {
        fail(a.x, b.x, "prime-power elements do not commute");
        break;
      }
    }
  }
  return verdict;
}

}  // namespace powcom
