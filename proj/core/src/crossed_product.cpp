#include "coeffcat/crossed/crossed_product.hpp"

namespace coeffcat {

CrossedProductRing::CrossedProductRing(CrossedData data) : data_(std::move(data)) {}

std::uint64_t CrossedProductRing::size() const { return saturatingPow(coefficients().size(), group().order()); }

CrossedProductRing::Element CrossedProductRing::one() const {
  const GroupElem e = group().identity();
  return basis(data_.tauInverse(e, e), e);
}

CrossedProductRing::Element CrossedProductRing::basis(RingElem r, GroupElem g) const {
  Element x = zero();
  x.at(g) = r;
  return x;
}

CrossedProductRing::Element CrossedProductRing::embed(RingElem r) const {
  const GroupElem e = group().identity();
  return basis(coefficients().mul(r, data_.tauInverse(e, e)), e);
}

CrossedProductRing::Element CrossedProductRing::add(const Element& x, const Element& y) const {
  Element z(x.size());
  for (std::size_t g = 0; g < x.size(); ++g) z[g] = coefficients().add(x[g], y[g]);
  return z;
}

CrossedProductRing::Element CrossedProductRing::negate(const Element& x) const {
  Element z(x.size());
  for (std::size_t g = 0; g < x.size(); ++g) z[g] = coefficients().neg(x[g]);
  return z;
}

CrossedProductRing::Element CrossedProductRing::multiply(const Element& x, const Element& y) const {
  const FiniteRing& r = coefficients();
  const FiniteGroup& grp = group();
  if (x.size() != grp.order() || y.size() != grp.order()) throw MismatchError("crossed product: element of another ring");
  Element z = zero();
  for (GroupElem g = 0; g < grp.order(); ++g) {
    if (x[g] == r.zero()) continue;
    const auto& ag = data_.alpha(g);
    for (GroupElem h = 0; h < grp.order(); ++h) {
      if (y[h] == r.zero()) continue;
      const GroupElem gh = grp.mul(g, h);
      z[gh] = r.add(z[gh], r.mul(r.mul(x[g], ag(y[h])), data_.tau(g, h)));
    }
  }
  return z;
}

RingElem CrossedProductRing::encode(const Element& x) const {
  if (size() > FiniteRing::kSizeLimit) throw LimitError("crossed product too large to index");
  RingElem idx = 0;
  for (std::size_t g = x.size(); g-- > 0;) idx = idx * coefficients().size() + x[g];
  return idx;
}

CrossedProductRing::Element CrossedProductRing::decode(RingElem index) const {
  Element x = zero();
  for (std::size_t g = 0; g < x.size(); ++g) {
    x[g] = index % coefficients().size();
    index /= coefficients().size();
  }
  return x;
}

FiniteRing CrossedProductRing::asFiniteRing() const {
  if (size() > FiniteRing::kSizeLimit) throw LimitError("crossed product too large to index");
  const CrossedProductRing self = *this;
  FiniteRing::Operations ops;
  ops.add = [self](RingElem a, RingElem b) { return self.encode(self.add(self.decode(a), self.decode(b))); };
  ops.mul = [self](RingElem a, RingElem b) { return self.encode(self.multiply(self.decode(a), self.decode(b))); };
  ops.neg = [self](RingElem a) { return self.encode(self.negate(self.decode(a))); };
  ops.name = [self](RingElem a) { return self.elementName(self.decode(a)); };
  ops.one = encode(one());
  const std::string label = coefficients().label() + "_{alpha,tau}" + group().name();
  return FiniteRing::fromOperations(static_cast<std::uint32_t>(size()), std::move(ops),
                                    Json{{"type", "CrossedProduct"}, {"name", label}, {"data", data_.toJson()}});
}

std::string CrossedProductRing::elementName(const Element& x) const {
  std::string out;
  for (GroupElem g = 0; g < x.size(); ++g) {
    if (x[g] == coefficients().zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coefficients().elementName(x[g]) + ")" + group().elementName(g);
  }
  return out.empty() ? "0" : out;
}

Json CrossedProductRing::toJson(const Element& x) const {
  Json j = Json::object();
  for (GroupElem g = 0; g < x.size(); ++g)
    if (x[g] != coefficients().zero()) j[group().elementName(g)] = coefficients().elementName(x[g]);
  return j;
}

std::vector<CheckResult> verifyCrossedProduct(const CrossedProductRing& ring, const Budget& budget) {
  const FiniteRing& r = ring.coefficients();
  const FiniteGroup& g = ring.group();
  const std::uint64_t nr = r.size(), ng = g.order();
  auto basisAt = [&](std::uint64_t i) { return ring.basis(static_cast<RingElem>(i % nr), static_cast<GroupElem>(i / nr)); };
  auto name = [&](const CrossedProductRing::Element& x) { return ring.elementName(x); };

  CheckBuilder assoc("crossed-product.associativity", "(x y) z = x (y z) on basis elements r g");
  CheckBuilder unit("crossed-product.unit", "tau_{e,e}^-1 e is a two-sided unit");
  CheckBuilder general("crossed-product.general", "associativity and distributivity on general elements");
  CheckBuilder commute("crossed-product.commutation",
                       "a r = alpha_a(r) a, r a = a alpha_a^-1(r), a b = tau_{a,b} ab");

  const std::uint64_t nb = nr * ng;
  auto s1 = sweep({nb, nb, nb}, budget.derive("cp-assoc"), [&](std::span<const std::uint64_t> i) {
    const auto x = basisAt(i[0]), y = basisAt(i[1]), z = basisAt(i[2]);
    if (ring.multiply(ring.multiply(x, y), z) != ring.multiply(x, ring.multiply(y, z)))
      return assoc.fail(Json{{"x", name(x)}, {"y", name(y)}, {"z", name(z)}});
    return true;
  });
  assoc.merge(s1.coverage);
  assoc.count(s1.visited);

  const auto one = ring.one();
  auto s2 = sweep({nb}, budget.derive("cp-unit"), [&](std::span<const std::uint64_t> i) {
    const auto x = basisAt(i[0]);
    if (ring.multiply(one, x) != x || ring.multiply(x, one) != x) return unit.fail(Json{{"x", name(x)}});
    return true;
  });
  unit.merge(s2.coverage);
  unit.count(s2.visited);

  {
    Rng rng(budget.derive("cp-general").seed);
    auto draw = [&] {
      CrossedProductRing::Element x = ring.zero();
      for (auto& c : x) c = static_cast<RingElem>(uniformIndex(rng, nr));
      return x;
    };
    general.sampled();
    for (std::uint64_t n = 0; n < budget.samples && !general.failed(); ++n) {
      const auto x = draw(), y = draw(), z = draw();
      general.count();
      if (ring.multiply(ring.multiply(x, y), z) != ring.multiply(x, ring.multiply(y, z)) ||
          ring.multiply(x, ring.add(y, z)) != ring.add(ring.multiply(x, y), ring.multiply(x, z)) ||
          ring.multiply(ring.add(x, y), z) != ring.add(ring.multiply(x, z), ring.multiply(y, z)))
        general.fail(Json{{"x", name(x)}, {"y", name(y)}, {"z", name(z)}});
    }
  }

  const auto& d = ring.data();
  auto s3 = sweep({ng, ng, nr}, budget.derive("cp-commute"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<GroupElem>(i[0]), b = static_cast<GroupElem>(i[1]);
    const auto x = static_cast<RingElem>(i[2]);
    const auto ea = ring.groupElement(a), eb = ring.groupElement(b);
    Json where{{"a", g.elementName(a)}, {"b", g.elementName(b)}, {"r", r.elementName(x)}};
    if (ring.multiply(ea, ring.embed(x)) != ring.multiply(ring.embed(d.alpha(a)(x)), ea))
      return commute.fail(std::move(where), "a r != alpha_a(r) a");
    if (ring.multiply(ring.embed(x), ea) != ring.multiply(ea, ring.embed(d.alpha(a).applyInverse(x))))
      return commute.fail(std::move(where), "r a != a alpha_a^-1(r)");
    if (ring.multiply(ea, eb) != ring.multiply(ring.embed(d.tau(a, b)), ring.groupElement(g.mul(a, b))))
      return commute.fail(std::move(where), "a b != tau_{a,b} ab");
    return true;
  });
  commute.merge(s3.coverage);
  commute.count(s3.visited);

  std::vector<CheckResult> out;
  for (auto* c : {&assoc, &unit, &general, &commute}) out.push_back(std::move(*c).finish());
  return out;
}

CrossedData fromExtension(const GroupExtension& ext, const FiniteRing& s) {
  const FiniteGroup& k = ext.kernelInclusion.source();
  const FiniteGroup& gamma = ext.total;
  const FiniteGroup& g = ext.quotient;
  const FiniteRing r = FiniteRing::groupRing(s, k);
  const std::uint32_t nk = k.order();

  std::vector<RingAutomorphism> alpha;
  for (GroupElem a = 0; a < g.order(); ++a) {
    const GroupElem sa = ext.section[a], sai = gamma.inv(sa);
    std::vector<GroupElem> conj(nk);
    for (GroupElem x = 0; x < nk; ++x) conj[x] = ext.kernelIndex(gamma.mul(sa, ext.kernelInclusion(x), sai));
    std::vector<RingElem> table(r.size());
    for (RingElem x = 0; x < r.size(); ++x) {
      const auto digits = r.components(x);
      std::vector<RingElem> moved(nk);
      for (GroupElem y = 0; y < nk; ++y) moved[conj[y]] = digits[y];
      table[x] = r.fromComponents(moved);
    }
    alpha.emplace_back(r, std::move(table), "conj(s(" + g.elementName(a) + "))");
  }
  std::vector<RingElem> tau;
  for (GroupElem a = 0; a < g.order(); ++a)
    for (GroupElem b = 0; b < g.order(); ++b) {
      const GroupElem t = gamma.mul(ext.section[a], ext.section[b], gamma.inv(ext.section[g.mul(a, b)]));
      tau.push_back(r.groupRingBasis(s.one(), ext.kernelIndex(t)));
    }
  return CrossedData::make(r, g, std::move(alpha), std::move(tau));
}

CheckResult verifyExtensionIsomorphism(const GroupExtension& ext, const FiniteRing& s, const Budget& budget) {
  CheckBuilder check("crossed-product.extension-isomorphism", "r g |-> r s(g) is a ring isomorphism onto S[Gamma]");
  const CrossedProductRing ring(fromExtension(ext, s));
  const FiniteRing target = FiniteRing::groupRing(s, ext.total);
  const FiniteRing& r = ring.coefficients();
  const FiniteGroup& k = ext.kernelInclusion.source();
  const FiniteGroup& g = ring.group();
  const FiniteGroup& gamma = ext.total;

  auto image = [&](const CrossedProductRing::Element& x) {
    std::vector<RingElem> out(gamma.order(), s.zero());
    for (GroupElem a = 0; a < g.order(); ++a) {
      const auto digits = r.components(x[a]);
      for (GroupElem y = 0; y < k.order(); ++y) {
        const GroupElem to = gamma.mul(ext.kernelInclusion(y), ext.section[a]);
        out[to] = s.add(out[to], digits[y]);
      }
    }
    return target.fromComponents(out);
  };

  if (ring.size() != target.size()) {
    check.fail(Json{{"source-size", ring.size()}, {"target-size", target.size()}}, "sizes differ");
    return std::move(check).finish();
  }
  check.count();
  if (image(ring.one()) != target.one()) {
    check.fail(Json{{"image-of-one", target.elementName(image(ring.one()))}}, "not unital");
    return std::move(check).finish();
  }
  // Bijective: the image of the coefficient-wise basis is a permutation of
  // Gamma times S, so checking injectivity over all elements suffices.
  const std::uint64_t n = ring.size();
  if (n <= budget.exhaustiveLimit) {
    std::vector<bool> seen(n, false);
    for (RingElem x = 0; x < n; ++x) {
      const RingElem y = image(ring.decode(x));
      check.count();
      if (seen[y]) {
        check.fail(Json{{"x", ring.elementName(ring.decode(x))}}, "two elements with the same image");
        return std::move(check).finish();
      }
      seen[y] = true;
    }
  } else {
    check.sampled();
  }
  const bool allPairs = saturatingMul(n, n) <= budget.exhaustiveLimit;
  const std::uint64_t m = allPairs ? n : std::uint64_t{r.size()} * g.order();
  auto element = [&](std::uint64_t i) {
    return allPairs ? ring.decode(static_cast<RingElem>(i))
                    : ring.basis(static_cast<RingElem>(i % r.size()), static_cast<GroupElem>(i / r.size()));
  };
  if (!allPairs) check.annotate("multiplicativity checked on all pairs of basis elements r g");
  const Budget pairs = allPairs ? budget : Budget{std::max(budget.exhaustiveLimit, m * m), budget.samples, budget.seed};
  auto st = sweep({m, m}, pairs.derive("ext-iso"), [&](std::span<const std::uint64_t> i) {
    const auto x = element(i[0]), y = element(i[1]);
    const bool mul = image(ring.multiply(x, y)) == target.mul(image(x), image(y));
    const bool add = image(ring.add(x, y)) == target.add(image(x), image(y));
    if (!mul || !add)
      return check.fail(Json{{"x", ring.elementName(x)}, {"y", ring.elementName(y)}},
                        mul ? "not additive" : "not multiplicative");
    return true;
  });
  check.count(st.visited);
  return std::move(check).finish();
}

}  // namespace coeffcat
