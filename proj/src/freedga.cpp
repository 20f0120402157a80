#include "tlloops/freedga.hpp"

#include <algorithm>
#include <random>

#include "tlloops/errors.hpp"

namespace tlloops {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::string scalar_text(const Scalar& c) {
  std::string s = c.str();
  bool composite = s.find_first_of("+ ") != std::string::npos || s.find('-', 1) != std::string::npos;
  return composite ? "(" + s + ")" : s;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

int Signature::index(std::string_view n) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == n) return static_cast<int>(i);
  return -1;
}

int Signature::degree(const Word& w) const {
  int s = 0;
  for (int g : w) s += generators[g].degree;
  return s;
}

int Signature::weight(const Word& w) const {
  int s = 0;
  for (int g : w) s += generators[g].weight;
  return s;
}

std::string Signature::word_text(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (int g : w) out += (out.empty() ? "" : ".") + generators[g].name;
  return out;
}

// ---------------------------------------------------------------------------

NCPoly::NCPoly(std::shared_ptr<const Signature> sig, PointedRing ring) : sig_(std::move(sig)), ring_(std::move(ring)) {}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ring_.domain()) : it->second;
}

void NCPoly::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (int g : w)
    if (g < 0 || g >= static_cast<int>(sig_->generators.size())) throw AlgebraError("unknown generator index");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::check_compatible(const NCPoly& o) const {
  if (!same_algebra(sig_, o.sig_)) throw AlgebraError("polynomials from different algebras: " + sig_->name + ", " + o.sig_->name);
  if (!(ring_ == o.ring_)) throw DomainMismatch("polynomials over different rings");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly out(sig_, ring_);
  for (const auto& [w, v] : terms_) out.add(w, v * c);
  return out;
}

NCPoly operator*(const NCPoly& p, const NCPoly& q) {
  p.check_compatible(q);
  NCPoly out(p.sig_, p.ring_);
  for (const auto& [u, c] : p.terms_)
    for (const auto& [v, e] : q.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, c * e);
    }
  return out;
}

std::optional<int> NCPoly::degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    int k = sig_->degree(w);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string t;
    if (w.empty()) t = scalar_text(c);
    else if (c.is_one()) t = sig_->word_text(w);
    else if ((-c).is_one()) t = "-" + sig_->word_text(w);
    else t = scalar_text(c) + "*" + sig_->word_text(w);
    if (out.empty()) out = t;
    else if (t.front() == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeDGA::FreeDGA(std::string name, PointedRing ring, std::vector<GradedGenerator> generators, std::vector<int> lr_swap)
    : ring_(std::move(ring)) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree < 1) throw AlgebraError("generator " + generators[i].name + " needs degree >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j].name == generators[i].name) throw AlgebraError("duplicate generator " + generators[i].name);
  }
  if (lr_swap.empty())
    for (std::size_t i = 0; i < generators.size(); ++i) lr_swap.push_back(static_cast<int>(i));
  if (lr_swap.size() != generators.size()) throw AlgebraError("lr_swap has the wrong length");
  for (std::size_t i = 0; i < lr_swap.size(); ++i) {
    int j = lr_swap[i];
    if (j < 0 || j >= static_cast<int>(lr_swap.size()) || lr_swap[j] != static_cast<int>(i) ||
        generators[j].degree != generators[i].degree)
      throw AlgebraError("lr_swap must be a degree-preserving involution");
  }
  sig_ = std::make_shared<Signature>(Signature{std::move(name), std::move(generators)});
  lr_swap_ = std::move(lr_swap);
  d_.assign(sig_->generators.size(), zero());
}

int FreeDGA::index(std::string_view name) const {
  int i = sig_->index(name == "x̂" ? std::string_view("xh") : name);
  if (i < 0) throw AlgebraError("unknown generator '" + std::string(name) + "' in " + sig_->name);
  return i;
}

NCPoly FreeDGA::constant(const Scalar& c) const {
  NCPoly p = zero();
  p.add({}, c);
  return p;
}

NCPoly FreeDGA::gen(std::string_view name) const { return word({index(name)}, ring_.from_int(1)); }

NCPoly FreeDGA::word(const Word& w, const Scalar& c) const {
  NCPoly p = zero();
  p.add(w, c);
  return p;
}

NCPoly FreeDGA::parse(std::string_view text) const {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "x̂") {
      s += "xh";
      i += std::string_view("x̂").size() - 1;
    } else {
      s += text[i];
    }
  }
  std::string_view body = trim(s);
  if (body.empty()) throw ParseError("empty polynomial");
  if (body == "0") return zero();
  std::vector<std::pair<bool, std::string_view>> parts;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  auto flush = [&](std::size_t end) {
    std::string_view t = trim(std::string_view(body).substr(start, end - start));
    if (t.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    parts.emplace_back(negative, t);
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    if (depth == 0 && (c == '+' || c == '-')) {
      if (trim(body.substr(start, i - start)).empty()) {
        if (!parts.empty() || i != 0) throw ParseError("dangling sign in '" + std::string(text) + "'");
        negative = c == '-';
        start = i + 1;
        continue;
      }
      flush(i);
      negative = c == '-';
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  flush(body.size());

  auto as_word = [&](std::string_view w) -> std::optional<Word> {
    Word out;
    std::size_t pos = 0;
    while (true) {
      std::size_t dot = w.find('.', pos);
      std::string_view name = trim(w.substr(pos, dot == std::string_view::npos ? w.npos : dot - pos));
      int i = sig_->index(name);
      if (i < 0) return std::nullopt;
      out.push_back(i);
      if (dot == std::string_view::npos) return out;
      pos = dot + 1;
    }
  };
  auto as_scalar = [&](std::string_view c) {
    c = trim(c);
    if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
    return Scalar::parse(trim(c), ring_.domain());
  };

  NCPoly out = zero();
  for (auto [neg, t] : parts) {
    Scalar coeff = ring_.from_int(1);
    Word w;
    std::size_t star = std::string_view::npos;
    depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0 && t[i] == '*') star = i;
    }
    if (auto direct = as_word(t)) {
      w = *direct;
    } else if (star != std::string_view::npos) {
      if (auto tail = as_word(t.substr(star + 1))) {
        w = *tail;
        coeff = as_scalar(t.substr(0, star));
      } else {
        coeff = as_scalar(t);
      }
    } else if (t == "1") {
      coeff = ring_.from_int(1);
    } else {
      coeff = as_scalar(t);
    }
    out.add(w, neg ? -coeff : coeff);
  }
  return out;
}

void FreeDGA::set_d(std::string_view generator, const NCPoly& image) {
  int g = index(generator);
  if (!same_algebra(image.signature_ptr(), sig_)) throw AlgebraError("differential image from another algebra");
  const auto& gg = sig_->generators[g];
  const bool symbolic = ring_.domain().kind() == Domain::Kind::int_poly_a;
  for (const auto& [w, c] : image.terms()) {
    if (sig_->degree(w) != gg.degree - 1)
      throw AlgebraError("d(" + gg.name + ") has a term of degree " + std::to_string(sig_->degree(w)));
    if (!symbolic && !ring_.a_is_zero()) continue;
    if (sig_->weight(w) + (symbolic ? c.weight() : 0) != gg.weight)
      throw AlgebraError("d(" + gg.name + ") does not preserve weight: term " + sig_->word_text(w));
  }
  d_[g] = image;
}

NCPoly FreeDGA::d(const NCPoly& p) const {
  if (!same_algebra(p.signature_ptr(), sig_)) throw AlgebraError("polynomial from another algebra");
  NCPoly out = zero();
  for (const auto& [w, c] : p.terms()) {
    int sign_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word left(w.begin(), w.begin() + static_cast<long>(i));
      Word right(w.begin() + static_cast<long>(i) + 1, w.end());
      Scalar s = sign_degree % 2 ? -c : c;
      for (const auto& [m, e] : d_[w[i]].terms()) {
        Word t = left;
        t.insert(t.end(), m.begin(), m.end());
        t.insert(t.end(), right.begin(), right.end());
        out.add(t, s * e);
      }
      sign_degree += sig_->generators[w[i]].degree;
    }
  }
  return out;
}

void FreeDGA::verify_d_squared() const {
  for (std::size_t g = 0; g < d_.size(); ++g) {
    NCPoly dd = d(d_[g]);
    if (!dd.is_zero())
      throw AlgebraError("d^2(" + sig_->generators[g].name + ") = " + dd.str() + " in " + sig_->name);
  }
}

NCPoly FreeDGA::sigma_tb(const NCPoly& p) const {
  if (!same_algebra(p.signature_ptr(), sig_)) throw AlgebraError("polynomial from another algebra");
  return p;
}

NCPoly FreeDGA::sigma_lr(const NCPoly& p) const {
  if (!same_algebra(p.signature_ptr(), sig_)) throw AlgebraError("polynomial from another algebra");
  NCPoly out = zero();
  for (const auto& [w, c] : p.terms()) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(lr_swap_[*it]);
    out.add(r, c);
  }
  return out;
}

std::vector<Word> FreeDGA::words_of_degree(int p) const {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = 0; g < sig_->generators.size(); ++g) {
      int k = sig_->generators[g].degree;
      if (k > left) continue;
      cur.push_back(static_cast<int>(g));
      self(self, left - k);
      cur.pop_back();
    }
  };
  if (p >= 0) rec(rec, p);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

NCPoly FreeDGA::convert(const NCPoly& p) const {
  NCPoly out = zero();
  for (const auto& [w, c] : p.terms()) out.add(w, tlloops::specialize(c, ring_));
  return out;
}

FreeDGA FreeDGA::specialize(const PointedRing& target) const {
  if (ring_.domain().kind() != Domain::Kind::int_poly_a)
    throw AlgebraError("only algebras over Z[a] can be specialized");
  FreeDGA out(sig_->name, target, sig_->generators, lr_swap_);
  out.sig_ = sig_;
  out.d_.assign(d_.size(), out.zero());
  for (std::size_t g = 0; g < d_.size(); ++g) out.d_[g] = out.convert(d_[g]);
  return out;
}

// ---------------------------------------------------------------------------

FreeDGA minimal_model(int two_n, const PointedRing& ring) {
  if (two_n < 2 || two_n % 2) throw AlgebraError("minimal models need an even 2n >= 2");
  const int n = two_n / 2;
  std::vector<GradedGenerator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"x" + std::to_string(2 * i - 1), 2 * i - 1, i});
  FreeDGA a("minimal(" + std::to_string(two_n) + ")", ring, gens);
  a.set_d("x1", a.constant(ring.a()));
  for (int i = 2; i <= n; ++i) {
    NCPoly d = a.zero();
    for (int j = 1; j < i; ++j) d.add({j - 1, i - j - 1}, Scalar::from_int(ring.domain(), binomial(i, j)));
    a.set_d(gens[i - 1].name, d);
  }
  a.verify_d_squared();
  return a;
}

FreeDGA four_model(const PointedRing& ring) {
  FreeDGA a("four", ring, {{"x", 1, 1}, {"xh", 1, 1}, {"r", 2, 1}, {"y", 3, 2}}, {1, 0, 2, 3});
  a.set_d("x", a.constant(ring.a()));
  a.set_d("xh", a.constant(ring.a()));
  a.set_d("r", a.gen("xh") - a.gen("x"));
  a.set_d("y", (a.gen("x") * a.gen("xh")).scaled(ring.from_int(2)) - a.gen("r").scaled(ring.a() * ring.from_int(2)));
  a.verify_d_squared();
  return a;
}

// ---------------------------------------------------------------------------

PolyMorphism::PolyMorphism(FreeDGA source, FreeDGA target, std::vector<NCPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.generators().size()) throw AlgebraError("one image per generator is needed");
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const auto& gen = source_.generators()[g];
    if (!same_algebra(images_[g].signature_ptr(), target_.signature_ptr()))
      throw AlgebraError("image of " + gen.name + " lies in another algebra");
    for (const auto& [w, c] : images_[g].terms())
      if (target_.signature().degree(w) != gen.degree || target_.signature().weight(w) != gen.weight)
        throw AlgebraError("image of " + gen.name + " changes degree or weight");
  }
}

NCPoly PolyMorphism::apply(const NCPoly& p) const {
  if (!same_algebra(p.signature_ptr(), source_.signature_ptr())) throw AlgebraError("polynomial from another algebra");
  NCPoly out = target_.zero();
  for (const auto& [w, c] : p.terms()) {
    NCPoly t = target_.constant(c);
    for (int g : w) t = t * images_[g];
    out += t;
  }
  return out;
}

ChainMapReport PolyMorphism::check_chain_map() const {
  ChainMapReport r;
  for (std::size_t g = 0; g < images_.size(); ++g) {
    NCPoly defect = target_.d(images_[g]) - apply(source_.d_of(static_cast<int>(g)));
    if (!defect.is_zero()) {
      r.ok = false;
      r.defects.push_back({source_.generators()[g].name, defect.str()});
    }
  }
  return r;
}

LoopsMorphism::LoopsMorphism(FreeDGA source, std::vector<Chain> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (images_.size() != source_.generators().size()) throw AlgebraError("one image per generator is needed");
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const auto& gen = source_.generators()[g];
    const Chain& c = images_[g];
    if (c.degree() != gen.degree || !c.ends().closed() || !c.ends().augmented || c.two_n() != 4)
      throw AlgebraError("image of " + gen.name + " must be a closed augmented 2n = 4 chain of degree " +
                         std::to_string(gen.degree));
    if (!(c.ring() == source_.ring())) throw DomainMismatch("image of " + gen.name + " has another ring");
    for (const auto& [x, v] : c.terms())
      if (x.loop_count() != gen.weight) throw AlgebraError("image of " + gen.name + " changes weight");
  }
}

void LoopsMorphism::set_image(std::string_view generator, Chain c) {
  std::vector<Chain> next = images_;
  next.at(static_cast<std::size_t>(source_.index(generator))) = std::move(c);
  *this = LoopsMorphism(source_, std::move(next));
}

Chain LoopsMorphism::apply(const NCPoly& p, int degree) const {
  const PointedRing& ring = source_.ring();
  const EndSpec ends{false, false, true};
  Chain out(ring, ends, 4, degree);
  for (const auto& [w, c] : p.terms()) {
    if (source_.signature().degree(w) != degree) throw AlgebraError("polynomial is not of degree " + std::to_string(degree));
    Chain t = Chain::of(Graffito::empty(4), ring, true).scaled(c);
    for (int g : w) t = product(t, images_[g]);
    out += t;
  }
  return out;
}

ChainMapReport LoopsMorphism::check_chain_map() const {
  ChainMapReport r;
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const auto& gen = source_.generators()[g];
    Chain defect = differential(images_[g]) - apply(source_.d_of(static_cast<int>(g)), gen.degree - 1);
    if (!defect.is_zero()) {
      r.ok = false;
      r.defects.push_back({gen.name, defect.str()});
    }
  }
  return r;
}

PolyMorphism psi(const PointedRing& ring) {
  FreeDGA m = minimal_model(4, ring);
  FreeDGA f = four_model(ring);
  return PolyMorphism(m, f, {f.gen("x"), f.parse("y + 2*x.r")});
}

LoopsMorphism phi(const PointedRing& ring) {
  FreeDGA f = four_model(ring);
  const std::string first = "TL(0,4){R1-R2,R3-R4}";
  const std::string last = "TL(4,0){L1-L2,L3-L4}";
  auto chain = [&](const std::string& text) { return Chain::parse(text, ring, true); };
  auto y_term = [&](const char* b1, const char* b2) {
    return "G(cc)[" + first + " | TL(4,4){" + b1 + "} | TL(4,4){" + b2 + "} | " + last + "]";
  };
  const char* b1a = "L1-R3,L2-L3,L4-R4,R1-R2";
  const char* b1b = "L1-R1,L2-L3,L4-R2,R3-R4";
  const char* b2a = "L1-L2,L3-R1,L4-R4,R2-R3";
  const char* b2b = "L1-R1,L2-R4,L3-L4,R2-R3";
  return LoopsMorphism(
      f, {chain("1*G(cc)[" + first + " | TL(4,0){L1-L4,L2-L3}]"),
          chain("1*G(cc)[TL(0,4){R1-R4,R2-R3} | " + last + "]"),
          chain("1*G(cc)[" + first + " | TL(4,4){L1-R1,L2-L3,L4-R4,R2-R3} | " + last + "]"),
          chain("1*" + y_term(b1a, b2a) + " + 1*" + y_term(b1b, b2b) + " + -1*" + y_term(b1a, b2b) + " + -1*" +
                y_term(b1b, b2a))});
}

// ---------------------------------------------------------------------------

ChainMapReport check_involution_relations(const FreeDGA& a, int samples, std::uint64_t seed) {
  ChainMapReport r;
  auto note = [&](const std::string& where, const NCPoly& defect) {
    if (defect.is_zero()) return;
    r.ok = false;
    r.defects.push_back({where, defect.str()});
  };
  auto sign = [&](const NCPoly& p) {
    auto deg = p.degree();
    return a.ring().from_int(deg && *deg % 2 ? 1 : -1);
  };
  auto relations = [&](const std::string& where, const NCPoly& p) {
    note(where + ": d sigma_tb", a.d(a.sigma_tb(p)) - a.sigma_tb(a.d(p)));
    note(where + ": d sigma_lr", a.d(a.sigma_lr(p)) - a.sigma_lr(a.d(p)).scaled(sign(p)));
    note(where + ": sigma_lr^2", a.sigma_lr(a.sigma_lr(p)) - p);
    note(where + ": sigma_tb^2", a.sigma_tb(a.sigma_tb(p)) - p);
  };
  for (const auto& g : a.generators()) relations(g.name, a.gen(g.name));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(a.generators().size()) - 1);
  auto random_word = [&](int max_degree) {
    Word w;
    int deg = 0;
    int len = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      int g = pick(rng);
      if (deg + a.generators()[g].degree > max_degree) break;
      deg += a.generators()[g].degree;
      w.push_back(g);
    }
    if (w.empty()) w.push_back(0);
    return w;
  };
  for (int t = 0; t < samples; ++t) {
    NCPoly u = a.word(random_word(5), a.ring().from_int(1));
    NCPoly v = a.word(random_word(5), a.ring().from_int(1 + static_cast<long>(rng() % 3)));
    std::string where = "sample " + std::to_string(t) + " (" + u.str() + ")";
    relations(where, u);
    relations(where + "*", u * v);
    note(where + ": sigma_lr antihomomorphism", a.sigma_lr(u * v) - a.sigma_lr(v) * a.sigma_lr(u));
    note(where + ": sigma_tb homomorphism", a.sigma_tb(u * v) - a.sigma_tb(u) * a.sigma_tb(v));
  }
  return r;
}

NCPoly alpha_boundary_defect(const PointedRing& ring, std::optional<std::string> witness) {
  if (!ring.a_is_zero()) throw AlgebraError("the alpha identity is stated for a = 0");
  PolyMorphism p = psi(ring);
  const FreeDGA& m = p.source();
  const FreeDGA& f = p.target();
  NCPoly alpha = m.gen("x1") * m.gen("x3") + m.gen("x3") * m.gen("x1");
  NCPoly image = p.apply(alpha);
  NCPoly w = f.parse(witness.value_or("r.y - y.r + 2*r.r.xh - 2*x.r.r"));
  return f.sigma_lr(image) - image - f.d(w);
}

ChainComplexData truncated_complex(const FreeDGA& a, int max_degree, bool nonunital) {
  ChainComplexData c;
  c.ring = a.ring();
  c.min_degree = nonunital ? 1 : 0;
  c.max_degree = max_degree;
  c.basis.assign(static_cast<std::size_t>(max_degree) + 1, {});
  c.weights.assign(static_cast<std::size_t>(max_degree) + 1, {});
  c.boundary.assign(static_cast<std::size_t>(max_degree) + 1, SparseMatrix(0, 0, a.ring().domain()));
  std::vector<std::vector<Word>> words(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::map<Word, std::size_t>> index(words.size());
  for (int p = c.min_degree; p <= max_degree; ++p) {
    words[p] = a.words_of_degree(p);
    for (std::size_t i = 0; i < words[p].size(); ++i) {
      index[p][words[p][i]] = i;
      c.basis[p].push_back(a.signature().word_text(words[p][i]));
      c.weights[p].push_back(a.signature().weight(words[p][i]));
    }
  }
  for (int p = c.min_degree; p <= max_degree; ++p) {
    const std::size_t rows = p == c.min_degree ? 0 : words[p - 1].size();
    std::vector<Triplet> t;
    if (p > c.min_degree)
      for (std::size_t j = 0; j < words[p].size(); ++j) {
        NCPoly dw = a.d(a.word(words[p][j], a.ring().from_int(1)));
        for (const auto& [w, v] : dw.terms()) {
          if (w.empty() && nonunital) continue;
          t.push_back({index[p - 1].at(w), j, v});
        }
      }
    c.boundary[p] = SparseMatrix::from_triplets(rows, words[p].size(), a.ring().domain(), std::move(t));
  }
  return c;
}

}  // namespace tlloops
