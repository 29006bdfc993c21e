#include "grassmann/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "grassmann/element.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/random.hpp"
#include "grassmann/setfamily.hpp"
#include "grassmann/structure.hpp"
#include "grassmann/subspace.hpp"
#include "grassmann/text.hpp"

namespace grassmann::verify {

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "unknown";
}

void Outcome::require(bool condition, const std::string& what) {
  if (condition) return;
  ++failures_;
  if (failure_text_.size() < 5) failure_text_.push_back(what);
}

void Outcome::note(const std::string& text) { notes_.push_back(text); }

std::string Outcome::detail() const {
  std::ostringstream os;
  const auto& parts = passed() ? notes_ : failure_text_;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "; " : "") << parts[i];
  if (failures_ > failure_text_.size()) {
    os << "; ... " << failures_ - failure_text_.size() << " more failures";
  }
  return os.str();
}

std::string criterion_title(int criterion) {
  switch (criterion) {
    case 1:
      return "maximal dimension table and odd-family search oracle";
    case 2:
      return "even n: maximal commutative subalgebras have dimension 3*2^(n-2)";
    case 3:
      return "gamma chains: dimension, monomial spans, initial spans, preservation, grading";
    case 4:
      return "worked examples reproduced exactly";
    case 5:
      return "initial terms are multiplicative on non-annihilating pairs";
    case 6:
      return "Erdos-Ko-Rado and two-level bounds";
    case 7:
      return "radical quotient dimensions separate the two constructions";
    case 8:
      return "odd intersecting families <=> square-zero monomial spans";
    default:
      return "supplementary structural checks";
  }
}

// ------------------------------------------------------------------- context

/// Per-run state: options, deterministic per-check randomness, and inputs
/// shared between the gamma-chain checks.
class Context {
 public:
  explicit Context(const Options& options) : options_(options) {}

  const Options& options() const { return options_; }
  int upto_n() const { return options_.upto_n; }
  bool mutated() const { return options_.mutate.count(anchor_) > 0; }

  void begin(const std::string& anchor) { anchor_ = anchor; }

  RandomSource random(std::uint64_t stream) const {
    return RandomSource(options_.seed * 1'000'003 + std::hash<std::string>{}(anchor_) + stream);
  }

  struct GammaSample {
    Subspace d;
    Permutation sigma;
    Subspace chain_sigma;
    Subspace chain_identity;
  };

  enum class Shape { Subalgebra, Commutative, SquareZero, RightIdeal, LeftIdeal };

  struct StructuredSample {
    Shape shape;
    Subspace d;
  };

  const std::vector<GammaSample>& gamma_samples(int n);
  const std::vector<StructuredSample>& structured_samples(int n);

 private:
  const Options& options_;
  std::string anchor_;
  std::map<int, std::vector<GammaSample>> gamma_samples_;
  std::map<int, std::vector<StructuredSample>> structured_samples_;
};

const std::vector<Context::GammaSample>& Context::gamma_samples(int n) {
  auto it = gamma_samples_.find(n);
  if (it != gamma_samples_.end()) return it->second;
  RandomSource rng(options_.seed + 7919 * static_cast<std::uint64_t>(n));
  std::vector<GammaSample> samples;
  for (int s = 0; s < 100; ++s) {
    Subspace d = rng.subspace(n, Field::rational(), rng.uniform(1, 10), rng.uniform(1, 5));
    Permutation sigma = rng.permutation(n);
    Subspace chain_sigma = gamma_chain(sigma, d);
    Subspace chain_identity = gamma_chain(Permutation::identity(n), d);
    samples.push_back({std::move(d), std::move(sigma), std::move(chain_sigma), std::move(chain_identity)});
  }
  return gamma_samples_.emplace(n, std::move(samples)).first->second;
}

namespace {

bool has_shape(Context::Shape shape, const Subspace& d) {
  switch (shape) {
    case Context::Shape::Subalgebra:
      return is_subalgebra(d);
    case Context::Shape::Commutative:
      return is_subalgebra(d) && is_commutative(d);
    case Context::Shape::SquareZero:
      return is_square_zero(d);
    case Context::Shape::RightIdeal:
      return is_right_ideal(d);
    case Context::Shape::LeftIdeal:
      return is_left_ideal(d);
  }
  return false;
}

const char* shape_name(Context::Shape shape) {
  switch (shape) {
    case Context::Shape::Subalgebra:
      return "subalgebra";
    case Context::Shape::Commutative:
      return "commutative subalgebra";
    case Context::Shape::SquareZero:
      return "square-zero subspace";
    case Context::Shape::RightIdeal:
      return "right ideal";
    case Context::Shape::LeftIdeal:
      return "left ideal";
  }
  return "?";
}

/// v_1 -> v_1 + v_K for an odd |K| >= 3 avoiding 1, other generators fixed.
/// Needs n >= 4.
AlgebraHom shear_automorphism(int n, RandomSource& rng) {
  std::vector<Element> images;
  for (int i = 1; i <= n; ++i) images.push_back(Element::generator(n, i));
  Mask k = 0;
  while (popcount(k) < 3 || popcount(k) % 2 == 0 || (k & bit(1))) k = rng.mask(n);
  images[0] += Element::monomial(n, k);
  return AlgebraHom(n, std::move(images));
}

SetFamily random_intersecting_odd_family(int n, RandomSource& rng) {
  while (true) {
    SetFamily f = rng.odd_family(n, 6);
    if (is_intersecting(f)) return f;
  }
}

Element nilpotent_element(int n, RandomSource& rng, const std::function<bool(Mask)>& allowed) {
  Element x(n);
  while (x.is_zero()) x = rng.element(n, Field::rational(), 3, allowed);
  return x;
}

}  // namespace

const std::vector<Context::StructuredSample>& Context::structured_samples(int n) {
  auto it = structured_samples_.find(n);
  if (it != structured_samples_.end()) return it->second;
  RandomSource rng(options_.seed + 104'729 * static_cast<std::uint64_t>(n));
  const Field q = Field::rational();
  auto positive = [](Mask m) { return m != 0; };
  auto even_positive = [](Mask m) { return m != 0 && popcount(m) % 2 == 0; };
  auto odd = [](Mask m) { return popcount(m) % 2 == 1; };

  std::vector<StructuredSample> samples;
  for (int s = 0; s < 20; ++s) {
    // Subalgebra generated by one or two nilpotent elements.
    std::vector<Element> gens{nilpotent_element(n, rng, positive)};
    if (rng.coin()) gens.push_back(nilpotent_element(n, rng, positive));
    samples.push_back({Shape::Subalgebra, generated_subalgebra(Subspace::span(n, q, gens))});

    // Central even elements plus one odd element generate a commutative algebra.
    std::vector<Element> comm{nilpotent_element(n, rng, odd)};
    if (n >= 2) comm.push_back(nilpotent_element(n, rng, even_positive));
    if (rng.coin()) comm.push_back(Element::one(n));
    samples.push_back({Shape::Commutative, generated_subalgebra(Subspace::span(n, q, comm))});

    // Monomial square-zero space moved by automorphisms (graded or not).
    Subspace zero_square = monomial_span(random_intersecting_odd_family(n, rng), q);
    zero_square = rng.linear_automorphism(n, q).apply(zero_square);
    if (n >= 4 && rng.coin()) zero_square = shear_automorphism(n, rng).apply(zero_square);
    samples.push_back({Shape::SquareZero, zero_square});

    // One-sided ideals generated by a single element; kept small.
    if (n <= 5) {
      const Element x = nilpotent_element(n, rng, positive);
      std::vector<Element> right, left;
      for (Mask m = 0; m <= full_mask(n); ++m) {
        const Element v = Element::monomial(n, m);
        right.push_back(x * v);
        left.push_back(v * x);
      }
      samples.push_back({Shape::RightIdeal, Subspace::span(n, q, right)});
      samples.push_back({Shape::LeftIdeal, Subspace::span(n, q, left)});
    } else {
      std::vector<Element> more{nilpotent_element(n, rng, positive)};
      samples.push_back({Shape::Subalgebra, generated_subalgebra(Subspace::span(n, q, more))});
      Subspace sq = monomial_span(random_intersecting_odd_family(n, rng), q);
      samples.push_back({Shape::SquareZero, rng.linear_automorphism(n, q).apply(sq)});
    }
  }
  return structured_samples_.emplace(n, std::move(samples)).first->second;
}

// -------------------------------------------------------------------- helpers

namespace {

const Field kQ = Field::rational();

Element el(const std::string& text, int n) { return parse_element(text, n, kQ); }

Subspace sp(int n, const std::vector<std::string>& texts) {
  std::vector<Element> v;
  for (const auto& t : texts) v.push_back(el(t, n));
  return Subspace::span(n, kQ, v);
}

std::string str(const Subspace& s) { return to_json(write_subspace(s)).dump(); }

std::string str(const SetFamily& f) { return to_json(f).dump(); }

Subspace even_part_space(int n) { return standard_space(n, SpaceSelector::even(), kQ); }

Subspace odd_piece(const Subspace& a) {
  return restrict_support(a, [](Mask m) { return popcount(m) % 2 == 1; });
}

int gamma_upper(const Context& ctx) { return std::min(7, ctx.upto_n()); }

// ------------------------------------------------------------- criterion 1

void check_dimension_table(Context&, Outcome& out) {
  const std::uint64_t expected[] = {2, 3, 6, 12, 27, 48, 101, 192};
  for (int n = 1; n <= 8; ++n) {
    const auto got = max_comm_dim(n);
    out.require(got == expected[n - 1], "n=" + std::to_string(n) + ": formula gives " +
                                            std::to_string(got) + ", expected " +
                                            std::to_string(expected[n - 1]));
  }
  out.note("n=1..8 -> 2,3,6,12,27,48,101,192");
}

std::function<void(Context&, Outcome&)> search_oracle(int n) {
  return [n](Context&, Outcome& out) {
    const SearchResult r = max_odd_intersecting(n);
    const std::uint64_t total = (std::uint64_t{1} << (n - 1)) + r.maximum;
    out.require(total == max_comm_dim(n), "2^(n-1) + " + std::to_string(r.maximum) + " = " +
                                              std::to_string(total) + " differs from formula " +
                                              std::to_string(max_comm_dim(n)));
    out.require(r.certificate.size() == r.maximum, "certificate size differs from maximum");
    out.require(is_intersecting(r.certificate) && is_odd_family(r.certificate),
                "certificate is not an odd intersecting system");
    out.note("2^" + std::to_string(n - 1) + " + " + std::to_string(r.maximum) + " = " +
             std::to_string(total));
    out.stat(std::to_string(r.nodes) + " nodes");
  };
}

// ------------------------------------------------------------- criterion 2

std::function<void(Context&, Outcome&)> even_corollary(int n) {
  return [n](Context&, Outcome& out) {
    const Subspace a = canonical_max_commutative(n);
    const std::size_t expected = std::size_t{3} << (n - 2);
    out.require(a.dim() == expected, "dim " + std::to_string(a.dim()) + " != " + std::to_string(expected));
    out.require(is_maximal_commutative(a), "canonical algebra is not maximal commutative");
    const Subspace d = odd_piece(a);
    const Subspace dp = perp(d);
    out.require(dp.dim() == (std::size_t{1} << (n - 2)),
                "perp of odd part has dim " + std::to_string(dp.dim()));
    out.require(dp == d, "odd part is not its own perp");
    out.note("dim " + std::to_string(a.dim()) + ", perp dim " + std::to_string(dp.dim()));
  };
}

// ------------------------------------------------------------- criterion 3

void check_gamma_dimension(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    for (const auto& s : ctx.gamma_samples(n)) {
      out.require(s.chain_sigma.dim() == s.d.dim() && s.chain_identity.dim() == s.d.dim(),
                  "dimension changed for " + str(s.d) + " under " + s.sigma.to_string());
      ++count;
    }
  }
  out.note(std::to_string(count) + " random subspaces, dimension preserved");
}

void check_gamma_monomial(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    for (const auto& s : ctx.gamma_samples(n)) {
      out.require(is_monomial_spanned(s.chain_sigma) && is_monomial_spanned(s.chain_identity),
                  "non-monomial chain result for " + str(s.d));
      ++count;
    }
  }
  out.note(std::to_string(count) + " chains spanned by monomials");
}

void check_gamma_initial(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  std::size_t differs = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    for (const auto& s : ctx.gamma_samples(n)) {
      out.require(s.chain_identity == initial_span(s.d), "identity chain != initial span for " + str(s.d));
      if (s.chain_sigma != s.chain_identity) ++differs;
      ++count;
    }
  }
  out.note(std::to_string(count) + " identity chains equal initial spans; " + std::to_string(differs) +
           " random-permutation chains differ from them");
}

void check_gamma_monotone(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    auto rng = ctx.random(static_cast<std::uint64_t>(n));
    for (const auto& s : ctx.gamma_samples(n)) {
      if (s.d.dim() < 2) continue;
      std::vector<Element> half(s.d.basis().begin(),
                                s.d.basis().begin() + static_cast<long>(s.d.dim() / 2));
      half.push_back(s.d.basis().back() + s.d.basis().front());
      const Subspace a = Subspace::span(n, kQ, half);
      const int i = rng.uniform(1, n);
      out.require(gamma(i, s.d).contains(gamma(i, a)), "gamma_" + std::to_string(i) +
                                                           " not monotone on " + str(a));
      ++count;
    }
  }
  out.note(std::to_string(count) + " nested pairs");
}

void check_gamma_products(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    auto rng = ctx.random(static_cast<std::uint64_t>(n));
    for (int s = 0; s < 100; ++s) {
      const Subspace a = rng.subspace(n, kQ, rng.uniform(1, 3), 3);
      const Subspace d = rng.subspace(n, kQ, rng.uniform(1, 3), 3);
      const int i = rng.uniform(1, n);
      const Subspace lhs = product_span(gamma(i, a), gamma(i, d));
      const Subspace rhs = gamma(i, product_span(a, d));
      out.require(rhs.contains(lhs), "gamma_" + std::to_string(i) + "(A)gamma_" + std::to_string(i) +
                                         "(D) not inside gamma(AD) for A=" + str(a) + ", D=" + str(d));
      ++count;
    }
  }
  out.note(std::to_string(count) + " random pairs");
}

void check_gamma_preservation(Context& ctx, Outcome& out) {
  std::map<std::string, std::size_t> seen;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    for (const auto& s : ctx.structured_samples(n)) {
      out.require(has_shape(s.shape, s.d), std::string("generator broke its own shape: ") + shape_name(s.shape));
      for (int i = 1; i <= n; ++i) {
        out.require(has_shape(s.shape, gamma(i, s.d)),
                    std::string(shape_name(s.shape)) + " not preserved by gamma_" + std::to_string(i) +
                        " on " + str(s.d));
      }
      ++seen[shape_name(s.shape)];
    }
  }
  for (const auto& [name, count] : seen) out.note(std::to_string(count) + " " + name + "s");
}

void check_monomial_subalgebra(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    auto rng = ctx.random(static_cast<std::uint64_t>(n));
    for (const auto& s : ctx.structured_samples(n)) {
      const Permutation sigma = rng.permutation(n);
      const Subspace a = gamma_chain(sigma, s.d);
      out.require(a.dim() == s.d.dim(), "chain changed dimension");
      out.require(is_monomial_spanned(a), "chain not monomial");
      out.require(has_shape(s.shape, a), std::string(shape_name(s.shape)) + " lost along chain " +
                                             sigma.to_string() + " on " + str(s.d));
      ++count;
    }
  }
  out.note(std::to_string(count) + " structured inputs monomialized with their shape intact");
}

void check_gamma_grading(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 3; n <= gamma_upper(ctx); ++n) {
    auto rng = ctx.random(static_cast<std::uint64_t>(n));
    for (int s = 0; s < 100; ++s) {
      std::vector<Element> gens;
      const int k = rng.uniform(1, 6);
      for (int g = 0; g < k; ++g) gens.push_back(rng.homogeneous(n, rng.uniform(0, n), kQ, 4));
      Subspace d = Subspace::span(n, kQ, gens);
      if (s % 4 == 0) d = rng.linear_automorphism(n, kQ).apply(monomial_span(n, d.pivots(), kQ));
      out.require(is_graded(d), "generator produced a non-graded space");
      const auto series = hilbert_series(d);
      const int i = rng.uniform(1, n);
      Subspace pieces(n, kQ);
      for (int deg = 0; deg <= n; ++deg) {
        pieces = sum(pieces, gamma(i, restrict_support(d, [deg](Mask m) { return popcount(m) == deg; })));
      }
      out.require(gamma(i, d) == pieces, "gamma_" + std::to_string(i) + " does not split by degree on " + str(d));
      out.require(hilbert_series(gamma_chain(Permutation::identity(n), d)) == series &&
                      hilbert_series(gamma_chain(rng.permutation(n), d)) == series,
                  "Hilbert series changed along a chain for " + str(d));
      ++count;
    }
  }
  out.note(std::to_string(count) + " graded inputs");
}

// ------------------------------------------------------------- criterion 4

void check_example_1(Context& ctx, Outcome& out) {
  const Subspace w = ctx.mutated() ? sp(2, {"v{1}"}) : sp(2, {"v{1}+v{2}"});
  const Subspace a = gamma(1, gamma(2, w));
  const Subspace b = gamma(2, gamma(1, w));
  out.require(a == sp(2, {"v{1}"}), "gamma_1 gamma_2 (W) = " + str(a));
  out.require(b == sp(2, {"v{2}"}), "gamma_2 gamma_1 (W) = " + str(b));
  out.require(gamma_chain(Permutation::identity(2), w) == a, "identity chain disagrees");
  out.require(gamma_chain(Permutation::reversed(2), w) == b, "reversed chain disagrees");
  out.note("gamma_1 gamma_2 (W) = F v1, gamma_2 gamma_1 (W) = F v2");
}

void check_example_2(Context& ctx, Outcome& out) {
  const int n = 4;
  const std::string gen = ctx.mutated() ? "v{1,2}+v{1,3}" : "v{1,2}+v{3,4}";
  const Subspace e3 = standard_space(n, SpaceSelector::degree(3));
  const Subspace e4 = standard_space(n, SpaceSelector::degree(4));
  const Subspace a = sum(sum(sp(n, {gen}), e3), e4);
  out.require(a.dim() == 6, "A has dim " + std::to_string(a.dim()));
  out.require(is_right_ideal(a) && is_left_ideal(a), "A is not a two-sided ideal");
  const Subspace g = gamma(1, a);
  out.require(g == sum(sum(sp(n, {"v{3,4}"}), e3), e4), "gamma_1(A) = " + str(g));
  const Subspace a2 = product_span(a, a);
  out.require(a2 == sp(n, {"v{1,2,3,4}"}), "A^2 = " + str(a2));
  const Subspace g2 = product_span(g, g);
  out.require(g2.is_zero(), "gamma_1(A)^2 = " + str(g2));
  const Subspace ga2 = gamma(1, a2);
  out.require(ga2.contains(g2) && ga2.dim() > g2.dim(), "gamma_1(A)^2 not strictly inside gamma_1(A^2)");
  out.note("square dims 1 vs 0; gamma_1(A)^2 strictly inside gamma_1(A^2)");
}

void check_example_3(Context& ctx, Outcome& out) {
  const int n = 6;
  const Subspace d = ctx.mutated() ? sp(n, {"v{1,2,3}+v{4,5,6}", "v{1,2,4}+2*v{3,5,6}+v{4,5,6}"})
                                   : sp(n, {"v{1,2,3}+v{4,5,6}", "v{1,2,4}+v{3,5,6}"});
  out.require(is_square_zero(d), "D is not square-zero");
  const SetFamily f_sigma = monomial_family(Permutation::identity(n), d);
  const SetFamily f_rho = monomial_family(Permutation::transposition(n, 3, 6), d);
  out.require(f_sigma == SetFamily(n, {0b000111, 0b001011}), "F_id(D) = " + str(f_sigma));
  out.require(f_rho == SetFamily(n, {0b111000, 0b001011}), "F_(36)(D) = " + str(f_rho));
  out.require(popcount(f_sigma.sets()[0] & f_sigma.sets()[1]) == 2 &&
                  popcount(f_rho.sets()[0] & f_rho.sets()[1]) == 1,
              "common-element counts are not 2 and 1");
  out.note("F_id = " + str(f_sigma) + ", F_(36) = " + str(f_rho));
}

void check_example_4(Context& ctx, Outcome& out) {
  const int n = 5;
  std::vector<Element> gens;
  const int top = ctx.mutated() ? n - 1 : n;
  for (int k = 1; k <= top; ++k) {
    Element x(n, kQ);
    for (Mask m = 0; m <= full_mask(n); ++m) {
      if (popcount(m) == k) x.add_term(m, Scalar(kQ, 1));
    }
    gens.push_back(x);
  }
  const Subspace d = Subspace::span(n, kQ, gens);
  out.require(d.dim() == static_cast<std::size_t>(n), "D has dim " + std::to_string(d.dim()));
  const std::vector<Permutation> perms{Permutation::identity(n), Permutation::reversed(n),
                                       Permutation({2, 4, 1, 5, 3}), Permutation({5, 1, 4, 2, 3})};
  std::vector<Subspace> results;
  for (const auto& sigma : perms) {
    std::vector<Mask> flag;
    Mask acc = 0;
    for (int t = 1; t <= n; ++t) flag.push_back(acc |= bit(sigma(t)));
    const Subspace a = gamma_chain(sigma, d);
    out.require(a == monomial_span(n, flag, kQ), "chain for " + sigma.to_string() + " gave " + str(a));
    results.push_back(a);
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      out.require(results[i] != results[j], "two permutations gave the same flag");
    }
  }
  out.note(std::to_string(perms.size()) + " permutations give their nested flags");
}

void check_example_6(Context& ctx, Outcome& out) {
  const int n = 3;
  const std::string first = ctx.mutated() ? "v{1,2}" : "v{1,2}+v{3}";
  const Subspace d = sp(n, {first, "v{1}", "v{1,3}", "v{1,2,3}"});
  out.require(d.dim() == 4 && is_subalgebra(d), "D is not a 4-dimensional subalgebra");
  const Subspace up = gamma_chain(Permutation::identity(n), d);
  const Subspace down = gamma_chain(Permutation::reversed(n), d);
  out.require(is_subalgebra(up) && is_subalgebra(down), "chain results are not subalgebras");
  const auto s0 = product_span(d, d).dim();
  const auto s1 = product_span(up, up).dim();
  const auto s2 = product_span(down, down).dim();
  out.require(s0 == 2 && s1 == 0 && s2 == 1, "square dims " + std::to_string(s0) + ", " +
                                                 std::to_string(s1) + ", " + std::to_string(s2) +
                                                 " instead of 2, 0, 1");
  out.note("square dims 2, 0, 1");
}

void check_example_7(Context& ctx, Outcome& out) {
  {
    const Element x = el(ctx.mutated() ? "v{1,2}+v{1,3}" : "v{1,2}+v{3,4}", 4);
    const auto defects = plucker_defects(x);
    out.require(defects.size() == 1 && defects[0].value == Scalar(kQ, 1), "witness defect is not 1");
    out.require(x * x == el("2*v{1,2,3,4}", 4), "witness square is " + print_element(x * x));
  }
  // Exhaustive over coefficients in {-1, 0, 1} for n = 4 and n = 5.
  std::size_t decomposable = 0;
  std::size_t total = 0;
  for (int n = 4; n <= std::min(5, ctx.upto_n()); ++n) {
    std::vector<Mask> pairs;
    for (Mask m = 0; m <= full_mask(n); ++m) {
      if (popcount(m) == 2) pairs.push_back(m);
    }
    std::size_t combos = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      Element x(n, kQ);
      std::size_t c = code;
      for (Mask m : pairs) {
        const int digit = static_cast<int>(c % 3) - 1;
        c /= 3;
        if (digit != 0) x.add_term(m, Scalar(kQ, digit));
      }
      bool all_zero = true;
      for (const auto& d : plucker_defects(x)) all_zero = all_zero && d.value.is_zero();
      const bool square_zero = (x * x).is_zero();
      out.require(all_zero == square_zero, "Pluecker test disagrees with x^2 = 0 for " + print_element(x));
      decomposable += square_zero;
      ++total;
    }
  }
  // Products of two linear forms always satisfy the relations.
  auto rng = ctx.random(1);
  for (int s = 0; s < 200; ++s) {
    const int n = rng.uniform(4, 6);
    const Element y = rng.homogeneous(n, 1, kQ, n);
    const Element z = rng.homogeneous(n, 1, kQ, n);
    for (const auto& d : plucker_defects(y * z)) {
      out.require(d.value.is_zero(), "decomposable " + print_element(y * z) + " violates a relation");
    }
  }
  out.note(std::to_string(total) + " exhaustive degree-2 elements (" + std::to_string(decomposable) +
           " square-zero); witness v{1,2}+v{3,4} has defect 1");
}

void check_example_8(Context& ctx, Outcome& out) {
  const Element x = el(ctx.mutated() ? "v{1}+v{2}" : "v{1}+v{2,3}", 3);
  const Element top = el("v{1,2,3}", 3);
  out.require(x * x == el("2*v{1,2,3}", 3), "(v1+v23)^2 = " + print_element(x * x));
  out.require((top * top).is_zero() && (x * top).is_zero() && (top * x).is_zero(),
              "products with v{1,2,3} do not vanish");
  const Subspace a = Subspace::span(3, kQ, {x, top});
  out.require(a.dim() == 2 && is_subalgebra(a), "A is not a 2-dimensional subalgebra");
  out.require(product_span(a, product_span(a, a)).is_zero(), "A is not nilpotent");

  // The subalgebra generated by v12 + v34 in E^(4) and its square-zero elements.
  const Subspace gen = generated_subalgebra(sp(4, {"v{1,2}+v{3,4}"}));
  out.require(gen == sp(4, {"v{1,2}+v{3,4}", "v{1,2,3,4}"}), "generated subalgebra = " + str(gen));
  const Element e1 = el("v{1,2}+v{3,4}", 4);
  const Element e2 = el("v{1,2,3,4}", 4);
  // (a e1 + b e2)^2 = a^2 e1^2 + ab (e1 e2 + e2 e1) + b^2 e2^2.
  const bool only_b_line = !(e1 * e1).is_zero() && (e1 * e2 + e2 * e1).is_zero() && (e2 * e2).is_zero();
  out.require(only_b_line, "square-zero elements are not exactly the line F v{1,2,3,4}");
  out.note("(v1+v23)^2 = 2 v123; square-zero elements of <v12+v34> span F v1234, a proper subspace");
}

// ------------------------------------------------------------- criterion 5

void check_order_condition(Context& ctx, Outcome& out) {
  auto rng = ctx.random(0);
  const int max_n = std::min(6, ctx.upto_n());
  std::size_t tested = 0;
  std::size_t drawn = 0;
  while (tested < 10'000) {
    const int n = rng.uniform(1, max_n);
    const Element x = rng.element(n, kQ, 4);
    const Element y = rng.element(n, kQ, 4);
    ++drawn;
    if (x.is_zero() || y.is_zero()) continue;
    if ((initial_monomial(x).mask() & initial_monomial(y).mask()) != 0) continue;
    const Element lhs = initial_term(x * y);
    const Element rhs = initial_term(x) * initial_term(y);
    out.require(lhs == rhs, "counterexample x=" + print_element(x) + ", y=" + print_element(y));
    ++tested;
  }
  out.note(std::to_string(tested) + " qualifying pairs out of " + std::to_string(drawn) + " drawn");
}

// ------------------------------------------------------------- criterion 6

void check_ekr(Context& ctx, Outcome& out) {
  const int max_n = ctx.upto_n() >= 7 ? 8 : ctx.upto_n();
  std::size_t cases = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const auto got = ekr_max(n, k);
      out.require(got == binomial(n - 1, k - 1), "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                                     ": " + std::to_string(got));
      ++cases;
    }
  }
  out.note(std::to_string(cases) + " (n, k) pairs equal C(n-1, k-1)");
}

void check_odd_even_bound(Context& ctx, Outcome& out) {
  for (int n = 2; n <= std::min(6, ctx.upto_n()); n += 2) {
    const auto r = max_odd_intersecting(n);
    out.require(r.maximum == (std::size_t{1} << (n - 2)), "n=" + std::to_string(n) + ": " +
                                                              std::to_string(r.maximum));
    // No family holds an odd set together with its complement.
    for (Mask m : r.certificate.sets()) {
      out.require(!r.certificate.contains(full_mask(n) & ~m), "certificate holds a complementary pair");
    }
    out.note("n=" + std::to_string(n) + ": " + std::to_string(r.maximum));
  }
}

void check_two_level(Context& ctx, Outcome& out) {
  const std::vector<std::pair<int, int>> cases = ctx.upto_n() >= 7
                                                     ? std::vector<std::pair<int, int>>{{5, 1}, {7, 1}}
                                                     : std::vector<std::pair<int, int>>{{5, 1}};
  for (auto [n, i] : cases) {
    const auto r = two_level_max(n, i);
    const auto expected = binomial(n, n - i - 1);
    out.require(r.maximum == expected, "n=" + std::to_string(n) + ": max " + std::to_string(r.maximum));
    out.require(r.all_maxima.size() == 1 && r.all_maxima.front() == level(n, n - i - 1),
                "maximizer is not unique or not the full upper level");
    out.note("n=" + std::to_string(n) + ", i=" + std::to_string(i) + ": " + std::to_string(r.maximum) +
             ", unique");
  }
}

void check_upper_levels_unique(Context&, Outcome& out) {
  SearchOptions all;
  all.enumerate_all = true;
  const auto r5 = max_odd_intersecting(5, all);
  out.require(r5.maximum == 11 && r5.all_maxima.size() == 1 && r5.all_maxima.front() == odd_upper_levels(5),
              "n=5 maxima: " + std::to_string(r5.all_maxima.size()));
  const auto r1 = max_odd_intersecting(1, all);
  out.require(r1.all_maxima.size() == 1 && r1.all_maxima.front() == SetFamily(1, {1}), "n=1 maxima wrong");
  out.note("n=5: unique maximum = upper odd levels (11 sets); n=1: {{1}}");
}

void check_star_pattern(Context& ctx, Outcome& out) {
  SearchOptions all;
  all.enumerate_all = true;
  const auto r3 = max_odd_intersecting(3, all);
  std::vector<SetFamily> expected;
  for (int l = 1; l <= 3; ++l) expected.push_back(family_union(odd_upper_levels(3), star(3, 1, l)));
  auto sorted = r3.all_maxima;
  auto key = [](const SetFamily& f) { return f.sets(); };
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::sort(expected.begin(), expected.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  out.require(sorted == expected, "n=3 maxima are not {[3], {x}} for x in [3]");
  if (ctx.upto_n() >= 7) {
    const auto r7 = max_odd_intersecting(7);
    bool matches = false;
    for (int l = 1; l <= 7; ++l) {
      matches = matches || r7.certificate == family_union(odd_upper_levels(7), star(7, 3, l));
    }
    out.require(matches, "n=7 certificate is not upper levels plus a star");
  }
  out.note("n=3: three maxima, one per star; n=7 certificate = upper levels + star");
}

// ------------------------------------------------------------- criterion 7

Subspace even_case_b(int n) {
  // E_even + sum of E_l (odd l > n/2) + C, with C the level-(2k+1) star at 1 when n = 4k+2.
  const int k = n / 4;
  std::vector<Mask> odd;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const int d = popcount(m);
    if (d % 2 == 1 && (2 * d > n || (n % 4 == 2 && d == 2 * k + 1 && (m & bit(1))))) odd.push_back(m);
  }
  return sum(even_part_space(n), monomial_span(n, odd, kQ));
}

std::function<void(Context&, Outcome&)> radical_invariant(int n) {
  return [n](Context&, Outcome& out) {
    const Subspace a = canonical_max_commutative(n);
    const Subspace b = even_case_b(n);
    out.require(is_maximal_commutative(a) && is_maximal_commutative(b), "A or B is not maximal commutative");
    out.require(a.dim() == b.dim(), "A and B differ in dimension");
    const auto qa = radical_quotient_dim(a);
    const auto qb = radical_quotient_dim(b);
    const std::uint64_t k = static_cast<std::uint64_t>(n / 4);
    const std::uint64_t expect_b = n % 4 == 0
                                       ? binomial(n, 2) + binomial(n, static_cast<int>(2 * k + 1))
                                       : binomial(n, 2) + binomial(n - 1, static_cast<int>(2 * k)) +
                                             binomial(n - 1, static_cast<int>(2 * k + 3));
    out.require(qa == binomial(n, 2) + 1, "A: " + std::to_string(qa));
    out.require(qb == expect_b, "B: " + std::to_string(qb) + ", expected " + std::to_string(expect_b));
    out.require(qa != qb, "radical quotients agree");
    out.note("dim rad/rad^2: A " + std::to_string(qa) + ", B " + std::to_string(qb));
  };
}

// ------------------------------------------------------------- criterion 8

void check_monomial_bridge(Context& ctx, Outcome& out) {
  auto rng = ctx.random(0);
  std::size_t intersecting = 0;
  const int max_n = std::min(6, ctx.upto_n());
  for (int s = 0; s < 500; ++s) {
    const int n = rng.uniform(1, max_n);
    const SetFamily f = rng.odd_family(n, 8);
    const bool combinatorial = is_intersecting(f) && is_odd_family(f);
    const Subspace d = monomial_span(f, kQ);
    const bool algebraic = is_square_zero(d) && std::all_of(d.basis().begin(), d.basis().end(),
                                                            [](const Element& b) { return b.is_odd(); });
    out.require(combinatorial == algebraic, "bridge fails for " + str(f));
    intersecting += combinatorial;
  }
  out.note("500 families, " + std::to_string(intersecting) + " intersecting");
}

// -------------------------------------------------------------- supplementary

void check_structure_bijection(Context& ctx, Outcome& out) {
  for (int n = 1; n <= std::min(6, ctx.upto_n()); ++n) {
    const Subspace a = canonical_max_commutative(n);
    const Subspace d = odd_piece(a);
    out.require(is_maximal_commutative(a), "n=" + std::to_string(n) + ": canonical algebra not maximal");
    out.require(perp(d) == d, "n=" + std::to_string(n) + ": D != perp(D)");
    out.require(assemble(d) == a, "n=" + std::to_string(n) + ": assemble(A n E_odd) != A");
  }
  auto rng = ctx.random(0);
  for (int s = 0; s < 30; ++s) {
    const int n = rng.uniform(2, std::min(5, ctx.upto_n()));
    SetFamily f = rng.odd_family(n, 4);
    if (!is_intersecting(f)) continue;
    const Subspace d = rng.linear_automorphism(n, kQ).apply(monomial_span(f, kQ));
    const Subspace a = assemble(d);
    out.require(is_subalgebra(a) && is_commutative(a), "assemble did not give a commutative subalgebra");
    out.require(odd_piece(a) == sum(product_span(even_part_space(n), d), d), "odd part of assemble(D) != E_even D");
  }
  out.note("maximal algebras decompose as E_even + D with D = D-perp; assemble gives commutative subalgebras");
}

void check_strukt2(Context& ctx, Outcome& out) {
  for (int n = 2; n <= std::min(6, ctx.upto_n()); ++n) {
    const auto r = max_odd_intersecting(n);
    const Subspace d = monomial_span(r.certificate, kQ);
    out.require(is_square_zero(d), "certificate span not square-zero");
    out.require(is_e0_submodule(d), "n=" + std::to_string(n) + ": maximal square-zero span not an E_even-module");
    out.require(perp(d) == d, "n=" + std::to_string(n) + ": maximal square-zero span differs from its perp");
  }
  // A square-zero module that is not maximal is strictly inside its perp.
  const Subspace small = sp(4, {"v{1,2,3}"});
  const Subspace closed = sum(product_span(even_part_space(4), small), small);
  out.require(perp(closed).contains(closed) && perp(closed) != closed, "non-maximal module equals its perp");
  out.note("maximum families span self-perpendicular E_even-modules; a smaller one is strictly inside its perp");
}

void check_unique_odd_4k1(Context&, Outcome& out) {
  const Subspace a = canonical_max_commutative(5);
  out.require(a.dim() == 27 && is_maximal_commutative(a), "n=5 canonical algebra wrong");
  out.require(odd_piece(a) == monomial_span(odd_upper_levels(5), kQ), "odd part is not E_3 + E_5");
  out.note("E_even + E_3 + E_5 in E^(5): dim 27, maximal");
}

void check_star_4k3(Context& ctx, Outcome& out) {
  for (int n : {3, 7}) {
    if (n > ctx.upto_n()) continue;
    for (int l = 1; l <= n; ++l) {
      const Subspace a = canonical_max_commutative(n, l);
      out.require(a.dim() == max_comm_dim(n), "n=" + std::to_string(n) + ", l=" + std::to_string(l) + ": dim " +
                                                  std::to_string(a.dim()));
      out.require(is_maximal_commutative(a), "n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                                                 ": not maximal");
    }
    out.note("n=" + std::to_string(n) + ": every star element gives dim " + std::to_string(max_comm_dim(n)));
  }
}

Subspace star_algebra(int n) {
  std::vector<Mask> masks;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (popcount(m) % 2 == 1 && (m & 1)) masks.push_back(m);
  }
  return assemble(monomial_span(n, masks, kQ));
}

// The witness E_even + Span{v_J : 1 in J, |J| odd} is maximal for every odd n.
// Its dimension 3*2^(n-2) is below the maximum only from n = 5 on; at n = 3
// both equal 6 and every maximal commutative subalgebra is maximal dimensional.
void check_small_maximal_odd(Context& ctx, Outcome& out) {
  for (int n : {3, 5, 7}) {
    if (n > ctx.upto_n()) continue;
    const Subspace a = star_algebra(n);
    out.require(is_maximal_commutative(a), "n=" + std::to_string(n) + ": not maximal");
    out.require(a.dim() == (std::size_t{3} << (n - 2)), "n=" + std::to_string(n) + ": dim " + std::to_string(a.dim()));
    if (n == 3) {
      out.require(a.dim() == max_comm_dim(n), "n=3: witness no longer reaches the maximum");
    } else {
      out.require(a.dim() < max_comm_dim(n), "n=" + std::to_string(n) + ": witness is maximal dimensional");
    }
    out.note("n=" + std::to_string(n) + ": maximal of dim " + std::to_string(a.dim()) +
             (n == 3 ? " = " : " < ") + std::to_string(max_comm_dim(n)));
  }
}

void check_contains_linear(Context& ctx, Outcome& out) {
  const int n = 4;
  std::vector<Element> images{el("v{1}+v{2,3,4}", n), el("v{2}", n), el("v{3}", n), el("v{4}", n)};
  const AlgebraHom rho = hom_from_images(images);
  out.require(rho.is_bijective(), "shear is not bijective");
  const Subspace a = star_algebra(n);
  const Subspace image = rho.apply(a);
  out.require(image.dim() == 12 && is_maximal_commutative(image), "image of A is not maximal of dim 12");
  auto rng = ctx.random(0);
  for (int s = 0; s < 10; ++s) {
    const int m = rng.uniform(2, std::min(5, ctx.upto_n()));
    const AlgebraHom alpha = rng.linear_automorphism(m, kQ);
    const Subspace moved = alpha.apply(star_algebra(m));
    out.require(is_maximal_commutative(moved) && moved.dim() == (std::size_t{3} << (m - 2)),
                "automorphic image not maximal for n=" + std::to_string(m));
    bool has_linear = false;
    for (const auto& b : moved.basis()) has_linear = has_linear || !grade_component(b, 1).is_zero();
    out.require(has_linear, "image lost its degree-1 element");
  }
  out.note("automorphic images of E_even + Span{v_J : 1 in J} stay maximal of dim 3*2^(n-2)");
}

void check_min_space(Context& ctx, Outcome& out) {
  std::size_t count = 0;
  for (int n = 2; n <= std::min(6, ctx.upto_n()); ++n) {
    auto rng = ctx.random(static_cast<std::uint64_t>(n));
    for (int s = 0; s < 20; ++s) {
      const Subspace a = rng.subspace(n, kQ, rng.uniform(1, 8), 4);
      const Subspace m = min_space(a);
      out.require(m.dim() == a.dim(), "dim(A^min) != dim(A) for " + str(a));
      out.require(is_graded(m), "A^min is not graded");
      ++count;
    }
    if (n < 3) continue;
    for (const auto& s : ctx.structured_samples(std::min(n, 5))) {
      const Subspace m = min_space(s.d);
      if (s.shape == Context::Shape::Subalgebra || s.shape == Context::Shape::Commutative) {
        out.require(is_subalgebra(m), "A^min of a subalgebra is not a subalgebra");
      }
      if (s.shape == Context::Shape::Commutative) out.require(is_commutative(m), "A^min lost commutativity");
      if (s.shape == Context::Shape::SquareZero) out.require(is_square_zero(m), "A^min lost square-zero");
      ++count;
    }
  }
  out.note(std::to_string(count) + " inputs");
}

void check_odd_commute(Context& ctx, Outcome& out) {
  auto rng = ctx.random(0);
  auto odd = [](Mask m) { return popcount(m) % 2 == 1; };
  std::size_t zero = 0;
  for (int s = 0; s < 500; ++s) {
    const int n = rng.uniform(1, std::min(6, ctx.upto_n()));
    const Element a = rng.element(n, kQ, 3, odd);
    const Element b = s % 3 == 0 ? a * rng.element(n, kQ, 2, [](Mask m) { return popcount(m) % 2 == 0; })
                                 : rng.element(n, kQ, 3, odd);
    const Element ab = a * b;
    out.require((ab == b * a) == ab.is_zero(), "odd pair commutes without vanishing product");
    out.require(ab == -(b * a), "odd elements do not anticommute");
    zero += ab.is_zero();
  }
  out.note("500 odd pairs (" + std::to_string(zero) + " with zero product)");
}

void check_phi_nondegenerate(Context& ctx, Outcome& out) {
  for (int n = 2; n <= std::min(6, ctx.upto_n()); n += 2) {
    const Subspace odd = standard_space(n, SpaceSelector::odd());
    out.require(perp(odd).is_zero(), "n=" + std::to_string(n) + ": perp(E_odd) != 0");
  }
  auto rng = ctx.random(0);
  auto odd = [](Mask m) { return popcount(m) % 2 == 1; };
  for (int s = 0; s < 200; ++s) {
    const int n = rng.uniform(1, std::min(6, ctx.upto_n()));
    const Element a = rng.element(n, kQ, 4, odd);
    const Element b = rng.element(n, kQ, 4, odd);
    out.require(phi(a, b) == -phi(b, a), "phi is not skew");
  }
  out.note("perp(E_odd) = 0 for n = 2, 4, 6; phi skew on 200 pairs");
}

void check_kernel_square_zero(Context& ctx, Outcome& out) {
  auto rng = ctx.random(0);
  for (int s = 0; s < 500; ++s) {
    const int n = rng.uniform(1, std::min(6, ctx.upto_n()));
    const int i = rng.uniform(1, n);
    const Element x = rng.element(n, kQ, 5);
    const Element y = rng.element(n, kQ, 5);
    out.require(((x - pi(i, x)) * (y - pi(i, y))).is_zero(), "ker(pi) not square-zero");
    out.require(pi(i, x * y) == pi(i, x) * pi(i, y), "pi is not multiplicative");
  }
  out.note("500 random pairs");
}

std::vector<Check> build_registry() {
  std::vector<Check> r;
  auto add = [&r](std::string anchor, int criterion, int min_n, bool mutable_input,
                  std::function<void(Context&, Outcome&)> fn) {
    r.push_back({std::move(anchor), criterion, min_n, mutable_input, std::move(fn)});
  };
  add("Theorem maxcommsubalg (i): dimension formula", 1, 1, false, check_dimension_table);
  for (int n = 1; n <= 7; ++n) {
    add("Theorem maxcommsubalg (i): search oracle n=" + std::to_string(n), 1, n, false, search_oracle(n));
  }
  for (int n : {2, 4, 6}) add("Corollary even n=" + std::to_string(n), 2, 1, false, even_corollary(n));

  add("Lemma decomposition (i)", 3, 3, false, check_gamma_dimension);
  add("Lemma decomposition (ii)", 3, 3, false, check_gamma_monomial);
  add("Proposition gamma-initial", 3, 3, false, check_gamma_initial);
  add("Equation gamma-subspace", 3, 3, false, check_gamma_monotone);
  add("Proposition gammaproperties (i)", 3, 3, false, check_gamma_products);
  add("Proposition gammaproperties (ii)-(v)", 3, 3, false, check_gamma_preservation);
  add("Theorem monomialsubalg", 3, 3, false, check_monomial_subalgebra);
  add("Proposition gamma-grading", 3, 3, false, check_gamma_grading);

  add("Example 8.1", 4, 1, true, check_example_1);
  add("Example 8.2", 4, 1, true, check_example_2);
  add("Example 8.3", 4, 1, true, check_example_3);
  add("Example 8.4", 4, 1, true, check_example_4);
  add("Example 8.6", 4, 1, true, check_example_6);
  add("Example 8.7", 4, 1, true, check_example_7);
  add("Example 8.8", 4, 1, true, check_example_8);

  add("Order condition (5.1)", 5, 1, false, check_order_condition);

  add("Erdos-Ko-Rado", 6, 2, false, check_ekr);
  add("Proposition oddintersecting (i)", 6, 2, false, check_odd_even_bound);
  add("Proposition oddintersecting (ii)", 6, 5, false, check_two_level);
  add("Proposition oddintersecting (iii)", 6, 5, false, check_upper_levels_unique);
  add("Proposition oddintersecting (iv)", 6, 3, false, check_star_pattern);

  add("Theorem maxcommsubalg (ii) n=4", 7, 1, false, radical_invariant(4));
  add("Theorem maxcommsubalg (ii) n=6", 7, 1, false, radical_invariant(6));

  add("Theorem maxcommsubalg (i): monomial bridge", 8, 1, false, check_monomial_bridge);

  add("Proposition strukt1", 0, 2, false, check_structure_bijection);
  add("Proposition strukt2", 0, 4, false, check_strukt2);
  add("Theorem maxcommsubalg (iii)", 0, 5, false, check_unique_odd_4k1);
  add("Theorem maxcommsubalg (iv)", 0, 3, false, check_star_4k3);
  add("Theorem maxcommsubalg (v)", 0, 3, false, check_small_maximal_odd);
  add("Proposition contains-linear", 0, 4, false, check_contains_linear);
  add("Proposition a^min", 0, 3, false, check_min_space);
  add("Odd elements commute iff their product vanishes", 0, 1, false, check_odd_commute);
  add("Phi non-degenerate for even n", 0, 2, false, check_phi_nondegenerate);
  add("Equation squarezero", 0, 1, false, check_kernel_square_zero);
  return r;
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> registry = build_registry();
  return registry;
}

std::vector<CheckResult> run(const Options& options, const std::function<bool(const Check&)>& select) {
  Context ctx(options);
  std::vector<CheckResult> results;
  for (const auto& check : checks()) {
    if (select && !select(check)) continue;
    CheckResult result{check.anchor, check.criterion, Status::Skip, "", "", 0.0};
    if (options.upto_n < check.min_n) {
      result.detail = "needs n >= " + std::to_string(check.min_n);
      results.push_back(std::move(result));
      continue;
    }
    ctx.begin(check.anchor);
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      check.run(ctx, outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.status = outcome.passed() ? Status::Pass : Status::Fail;
    result.detail = outcome.detail();
    result.stats = outcome.stats();
    results.push_back(std::move(result));
  }
  return results;
}

nlohmann::json report(const std::vector<CheckResult>& results) {
  auto out = nlohmann::json::array();
  for (const auto& r : results) {
    out.push_back({{"anchor", r.anchor}, {"status", to_string(r.status)}, {"detail", r.detail}});
  }
  return out;
}

}  // namespace grassmann::verify
