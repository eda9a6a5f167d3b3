#include "framegraph/dsl.hpp"

#include <cctype>
#include <optional>

#include "framegraph/error.hpp"

namespace framegraph {

GraphExpr GraphExpr::leaf(FamilySpec spec) {
  GraphExpr e;
  e.kind = Kind::family;
  e.family = std::move(spec);
  return e;
}

GraphExpr GraphExpr::make_product(ProductKind kind, GraphExpr a, GraphExpr b) {
  GraphExpr e;
  e.kind = Kind::product;
  e.product = kind;
  e.operands.push_back(std::move(a));
  e.operands.push_back(std::move(b));
  return e;
}

Graph GraphExpr::build() const {
  if (is_family()) return make_named(family);
  const Graph g = left().build();
  const Graph h = right().build();
  ProductSpec spec{product, std::nullopt};
  if (product == ProductKind::vertex_sum) spec.attach = {attach[0], attach[1]};
  return framegraph::product(spec, g, h);
}

std::string GraphExpr::to_string() const {
  if (is_family()) {
    std::string out = family_name(family.family) + ":";
    if (family.family == Family::tree_from_edges) {
      out += "[";
      for (std::size_t i = 0; i < family.edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(family.edges[i].first) + "-" +
               std::to_string(family.edges[i].second);
      }
      return out + "]";
    }
    for (std::size_t i = 0; i < family.params.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(family.params[i]);
    }
    return out;
  }
  std::string a = left().to_string();
  std::string b = right().to_string();
  if (product == ProductKind::vertex_sum) {
    a += "@" + std::to_string(attach[0]);
    b += "@" + std::to_string(attach[1]);
  }
  return product_name(product) + "(" + a + "," + b + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("graph DSL: " + what + " at column " +
                         std::to_string(pos_) + " in \"" + std::string(text_) +
                         "\"",
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a family or product name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    if (!peek_digit()) fail("expected an integer");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  static std::optional<ProductKind> product_kind(const std::string& w) {
    if (w == "join") return ProductKind::join;
    if (w == "vsum") return ProductKind::vertex_sum;
    if (w == "cartesian") return ProductKind::cartesian;
    if (w == "strong") return ProductKind::strong;
    if (w == "corona") return ProductKind::corona;
    return std::nullopt;
  }

  static std::optional<Family> family_kind(const std::string& w) {
    if (w == "path") return Family::path;
    if (w == "cycle") return Family::cycle;
    if (w == "complete") return Family::complete;
    if (w == "kbip") return Family::complete_bipartite;
    if (w == "star") return Family::star;
    if (w == "empty") return Family::empty;
    if (w == "hreg") return Family::h_regular;
    if (w == "tree") return Family::tree_from_edges;
    if (w == "kminus") return Family::complete_minus_edge;
    return std::nullopt;
  }

  GraphExpr expr() {
    const std::size_t start = pos_;
    const std::string name = word();
    if (auto kind = product_kind(name)) {
      expect('(');
      GraphExpr a = expr();
      int attach_a = 0, attach_b = 0;
      if (*kind == ProductKind::vertex_sum) {
        expect('@');
        attach_a = integer();
      }
      expect(',');
      GraphExpr b = expr();
      if (*kind == ProductKind::vertex_sum) {
        expect('@');
        attach_b = integer();
      }
      expect(')');
      GraphExpr e = GraphExpr::make_product(*kind, std::move(a), std::move(b));
      e.attach = {attach_a, attach_b};
      return e;
    }
    auto fam = family_kind(name);
    if (!fam) {
      pos_ = start;
      skip_space();
      fail("unknown family or product \"" + name + "\"");
    }
    expect(':');
    FamilySpec spec;
    spec.family = *fam;
    if (*fam == Family::tree_from_edges) {
      expect('[');
      if (!peek(']')) {
        for (;;) {
          const int u = integer();
          expect('-');
          const int v = integer();
          spec.edges.emplace_back(u, v);
          if (peek(',')) {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(']');
      return GraphExpr::leaf(std::move(spec));
    }
    spec.params.push_back(integer());
    // A comma followed by a digit continues the parameter list; otherwise
    // it separates product operands.
    while (peek(',')) {
      const std::size_t save = pos_;
      ++pos_;
      if (!peek_digit()) {
        pos_ = save;
        break;
      }
      spec.params.push_back(integer());
    }
    return GraphExpr::leaf(std::move(spec));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphExpr parse_graph_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace framegraph
