#include "sdl/measure_spec.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "sdl/error.hpp"
#include "sdl/rng.hpp"

namespace sdl {
namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  MeasureSpec run() {
    MeasureSpec spec = node();
    skip_ws();
    if (pos_ != s_.size())
      fail("trailing characters after measure expression");
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    fail_usage("measure spec: " + what + " at position " +
               std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isalpha(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  double number() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    if (!std::isfinite(v)) fail("number out of range");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  long long integer() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  // Parameters are keyed and must appear in grammar order, e.g. "k=2,n=8".
  long long keyed_int(const char* key) {
    require_key(key);
    return integer();
  }

  double keyed_float(const char* key) {
    require_key(key);
    return number();
  }

  void require_key(const char* key) {
    skip_ws();
    const std::size_t at = pos_;
    const std::string got = ident();
    if (got != key) {
      pos_ = at;
      fail(std::string("expected parameter '") + key + "'");
    }
    expect('=');
  }

  std::vector<double> float_list() {
    std::vector<double> out;
    out.push_back(number());
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        out.push_back(number());
      } else {
        return out;
      }
    }
  }

  void check_count(long long v, const char* what) {
    if (v < 1) fail(std::string(what) + " must be >= 1");
  }

  void check_cantor(double ratio, long long depth) {
    if (!(ratio > 0.0) || !(ratio < 0.5)) fail("ratio must lie in (0, 1/2)");
    if (depth < 0 || depth > 24) fail("depth must lie in [0, 24]");
  }

  MeasureSpec node() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    MeasureSpec spec;
    expect('(');
    if (name == "sphere") {
      spec.kind = SpecKind::sphere;
      spec.k = keyed_int("k");
      expect(',');
      spec.n = keyed_int("n");
      check_count(spec.k, "k");
      check_count(spec.n, "n");
    } else if (name == "cantor" || name == "rcantor") {
      spec.kind = name == "cantor" ? SpecKind::cantor : SpecKind::rcantor;
      spec.ratio = keyed_float("ratio");
      expect(',');
      spec.depth = keyed_int("depth");
      check_cantor(spec.ratio, spec.depth);
    } else if (name == "uniform") {
      spec.kind = SpecKind::uniform;
      spec.d = keyed_int("d");
      expect(',');
      spec.n = keyed_int("n");
      check_count(spec.d, "d");
      check_count(spec.n, "n");
    } else if (name == "disk") {
      spec.kind = SpecKind::disk;
      spec.n = keyed_int("n");
      check_count(spec.n, "n");
    } else if (name == "dirac") {
      spec.kind = SpecKind::dirac;
      spec.values = float_list();
    } else if (name == "brownian") {
      spec.kind = SpecKind::brownian;
      spec.children.push_back(node());
      expect(',');
      spec.d = keyed_int("d");
      check_count(spec.d, "d");
    } else if (name == "product") {
      spec.kind = SpecKind::product;
      spec.children.push_back(node());
      expect(',');
      spec.children.push_back(node());
    } else if (name == "translate") {
      spec.kind = SpecKind::translate;
      spec.children.push_back(node());
      expect(',');
      spec.values = float_list();
    } else if (name == "lift") {
      spec.kind = SpecKind::lift;
      spec.children.push_back(node());
    } else if (name == "autocorr") {
      spec.kind = SpecKind::autocorr;
      spec.children.push_back(node());
    } else {
      pos_ = at;
      fail("unknown constructor '" + name + "'");
    }
    expect(')');
    return spec;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

DiscreteMeasure realize_node(const MeasureSpec& s, std::uint64_t seed,
                             std::uint64_t& counter, const Budgets& budgets) {
  switch (s.kind) {
    case SpecKind::sphere:
      return make_sphere_measure(static_cast<std::size_t>(s.k),
                                 static_cast<std::size_t>(s.n),
                                 derive_seed(seed, counter++));
    case SpecKind::cantor:
      return make_cantor_measure(s.ratio, static_cast<int>(s.depth));
    case SpecKind::rcantor:
      return make_random_translate_cantor(s.ratio, static_cast<int>(s.depth),
                                          derive_seed(seed, counter++));
    case SpecKind::uniform:
      return make_uniform_cube(static_cast<std::size_t>(s.d),
                               static_cast<std::size_t>(s.n),
                               derive_seed(seed, counter++));
    case SpecKind::disk:
      return make_uniform_disk(static_cast<std::size_t>(s.n),
                               derive_seed(seed, counter++));
    case SpecKind::dirac:
      return dirac(s.values);
    case SpecKind::brownian: {
      // Claim the salt before descending so it reflects this node's DFS
      // position, not how much randomness the subtree consumed.
      const std::uint64_t salt = counter++;
      DiscreteMeasure base =
          realize_node(s.children[0], seed, counter, budgets);
      return brownian_image(base, static_cast<std::size_t>(s.d),
                            derive_seed(seed, salt));
    }
    case SpecKind::product: {
      DiscreteMeasure a = realize_node(s.children[0], seed, counter, budgets);
      DiscreteMeasure b = realize_node(s.children[1], seed, counter, budgets);
      return product_measure(a, b, budgets.max_product_atoms);
    }
    case SpecKind::translate:
      return translate(realize_node(s.children[0], seed, counter, budgets),
                       s.values);
    case SpecKind::lift:
      return lift(realize_node(s.children[0], seed, counter, budgets));
    case SpecKind::autocorr:
      return autocorrelation(realize_node(s.children[0], seed, counter, budgets),
                             budgets.max_autocorr_atoms);
  }
  fail_assertion("measure spec: unhandled node kind");
}

}  // namespace

MeasureSpec parse_measure_spec(const std::string& text) {
  return Parser(text).run();
}

DiscreteMeasure realize(const MeasureSpec& spec, std::uint64_t seed,
                        const Budgets& budgets) {
  std::uint64_t counter = 0;
  return realize_node(spec, seed, counter, budgets);
}

}  // namespace sdl
