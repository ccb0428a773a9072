#include "orbifold/signature.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "orbifold/error.hpp"

namespace orbifold {

namespace {

// Minimal representative of a cyclic word under rotation and reversal.
std::vector<int> canonical_cycle(std::vector<int> w) {
  if (w.size() <= 1) return w;
  std::vector<int> best = w;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < w.size(); ++s) {
      std::vector<int> rot(w.begin() + s, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + s);
      if (rot < best) best = rot;
    }
    std::reverse(w.begin(), w.end());
  }
  return best;
}

void check_orders(const std::vector<int>& orders, const char* what) {
  for (int p : orders) {
    if (p < 2) {
      throw Error(ErrorCode::InvalidOrder,
                  std::string(what) + " order " + std::to_string(p) + " < 2");
    }
  }
}

class SignatureParser {
 public:
  explicit SignatureParser(const std::string& text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Signature run() {
    bool orientable;
    if (eat('O')) {
      orientable = true;
    } else if (eat('N')) {
      orientable = false;
    } else {
      fail("expected 'O' or 'N'");
    }
    int genus = integer();
    std::vector<int> cones = order_list();
    std::vector<MirrorComponent> boundary;
    while (eat('*')) {
      boundary.push_back(MirrorComponent{order_list()});
    }
    if (pos_ != text_.size()) fail("trailing input");
    return make_signature(orientable, genus, std::move(cones), std::move(boundary));
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::SyntaxError,
                why + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int integer() {
    std::size_t start = pos_;
    if (eat('-')) {
      // negative orders are syntactically integers; range check comes later
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) fail("expected an integer");
    long long v = 0;
    bool neg = text_[start] == '-';
    for (std::size_t i = start + (neg ? 1 : 0); i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > 1000000000) fail("integer out of range");
    }
    return static_cast<int>(neg ? -v : v);
  }

  std::vector<int> order_list() {
    if (!eat('(')) fail("expected '('");
    std::vector<int> orders;
    if (!eat(')')) {
      orders.push_back(integer());
      while (eat(',')) orders.push_back(integer());
      if (!eat(')')) fail("expected ')'");
    }
    return orders;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Signature make_signature(bool orientable, int genus, std::vector<int> cones,
                         std::vector<MirrorComponent> boundary) {
  if (genus < 0) {
    throw Error(ErrorCode::InvalidGenus, "negative genus " + std::to_string(genus));
  }
  if (!orientable && genus == 0) {
    throw Error(ErrorCode::InvalidGenus, "non-orientable base needs at least one crosscap");
  }
  check_orders(cones, "cone");
  for (auto& comp : boundary) {
    check_orders(comp.corners, "corner");
    comp.corners = canonical_cycle(std::move(comp.corners));
  }
  std::sort(cones.begin(), cones.end(), std::greater<int>());
  std::sort(boundary.begin(), boundary.end());
  Signature sig;
  sig.orientable = orientable;
  sig.genus = genus;
  sig.cone_points = std::move(cones);
  sig.boundary = std::move(boundary);
  return sig;
}

Signature parse_signature(const std::string& text) {
  return SignatureParser(text).run();
}

std::string format_signature(const Signature& sig) {
  auto orders = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
    return out + ")";
  };
  std::string out = sig.orientable ? "O" : "N";
  out += std::to_string(sig.genus);
  out += orders(sig.cone_points);
  for (const auto& comp : sig.boundary) {
    out += "*" + orders(comp.corners);
  }
  return out;
}

Signature double_mirrors(const Signature& sig) {
  if (sig.boundary.empty()) {
    throw Error(ErrorCode::NoMirrors, "closed signature has no mirror locus to double");
  }
  if (!sig.orientable) {
    throw Error(ErrorCode::Unsupported, "doubling is only defined here for orientable bases");
  }
  int b = static_cast<int>(sig.boundary.size());
  std::vector<int> cones;
  for (int p : sig.cone_points) {
    cones.push_back(p);
    cones.push_back(p);
  }
  for (const auto& comp : sig.boundary) {
    for (int q : comp.corners) cones.push_back(q);
  }
  return make_signature(true, 2 * sig.genus + b - 1, std::move(cones), {});
}

}  // namespace orbifold
