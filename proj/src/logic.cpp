#include "beliefkernel/logic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace bk {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_keyword(std::string_view s) { return s == "top" || s == "bot"; }

bool valid_atom_name(std::string_view s) {
  if (s.empty() || is_keyword(s) || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

Signature::Signature(std::vector<std::string> atoms) {
  if (atoms.empty()) throw InvalidValueError("signature needs at least one atom");
  if (static_cast<int>(atoms.size()) > kMaxAtoms)
    throw ScopeError("signature exceeds " + std::to_string(kMaxAtoms) + " atoms");
  std::unordered_set<std::string_view> seen;
  for (const auto& a : atoms) {
    if (!valid_atom_name(a)) throw InvalidValueError("invalid atom name: '" + a + "'");
    if (!seen.insert(a).second) throw InvalidValueError("duplicate atom name: '" + a + "'");
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(atoms)});
}

int Signature::index_of(std::string_view name) const noexcept {
  const auto& atoms = impl_->atoms;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (atoms[k] == name) return static_cast<int>(k);
  return -1;
}

std::string world_name(World w, const Signature& sig) {
  std::string out;
  for (int k = 0; k < sig.atom_count(); ++k) {
    if (k) out += ' ';
    if (!w.true_at(k)) out += '-';
    out += sig.atom(k);
  }
  return out;
}

World world_from_name(std::string_view text, const Signature& sig) {
  int index = 0;
  std::uint32_t assigned = 0;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    bool value = true;
    if (text[pos] == '-') {
      value = false;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    std::string_view name = text.substr(start, pos - start);
    int k = sig.index_of(name);
    if (k < 0) throw ParseError("unknown atom '" + std::string(name) + "' in world", start);
    if (assigned & (1u << k)) throw ParseError("atom '" + std::string(name) + "' repeated in world", start);
    assigned |= 1u << k;
    if (value) index |= 1 << k;
    skip_ws();
  }
  if (assigned != (1u << sig.atom_count()) - 1)
    throw ParseError("world does not assign every atom", text.size());
  return World{index};
}

std::vector<World> worlds_in(WorldMask mask) {
  std::vector<World> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(World{i});
  return out;
}

// ---------------------------------------------------------------------------
// Formula AST and parser
// ---------------------------------------------------------------------------

struct Formula::Node {
  enum class Op : std::uint8_t { Atom, Not, And, Or, Implies, Iff, Top, Bottom };
  Op op;
  int atom = -1;
  NodePtr lhs, rhs;
};

namespace {

using Op = Formula::Node::Op;
using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make_node(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, int atom = -1) {
  auto n = std::make_shared<Formula::Node>();
  n->op = op;
  n->atom = atom;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

WorldMask eval_models(const Formula::Node& n, const Signature& sig) {
  const WorldMask universe = sig.universe();
  switch (n.op) {
    case Op::Top:
      return universe;
    case Op::Bottom:
      return 0;
    case Op::Atom: {
      WorldMask m = 0;
      for (int w = 0; w < sig.world_count(); ++w)
        if ((w >> n.atom) & 1) m |= WorldMask{1} << w;
      return m;
    }
    case Op::Not:
      return universe & ~eval_models(*n.lhs, sig);
    case Op::And:
      return eval_models(*n.lhs, sig) & eval_models(*n.rhs, sig);
    case Op::Or:
      return eval_models(*n.lhs, sig) | eval_models(*n.rhs, sig);
    case Op::Implies:
      return universe & (~eval_models(*n.lhs, sig) | eval_models(*n.rhs, sig));
    case Op::Iff:
      return universe & ~(eval_models(*n.lhs, sig) ^ eval_models(*n.rhs, sig));
  }
  return 0;
}

struct Token {
  enum class Kind { LParen, RParen, Not, And, Or, Implies, Iff, Ident, Top, Bottom, End };
  Kind kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    if (pos_ >= src_.size()) return {Token::Kind::End, "", pos_};
    const std::size_t start = pos_;
    const char c = src_[pos_];
    switch (c) {
      case '(': ++pos_; return {Token::Kind::LParen, "(", start};
      case ')': ++pos_; return {Token::Kind::RParen, ")", start};
      case '!': ++pos_; return {Token::Kind::Not, "!", start};
      case '&': ++pos_; return {Token::Kind::And, "&", start};
      case '|': ++pos_; return {Token::Kind::Or, "|", start};
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Token::Kind::Implies, "->", start};
        }
        throw ParseError("expected '->'", start);
      case '<':
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == '-' && src_[pos_ + 2] == '>') {
          pos_ += 3;
          return {Token::Kind::Iff, "<->", start};
        }
        throw ParseError("expected '<->'", start);
      default:
        break;
    }
    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      if (word == "top") return {Token::Kind::Top, word, start};
      if (word == "bot") return {Token::Kind::Bottom, word, start};
      return {Token::Kind::Ident, word, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  std::string_view src_;
  std::size_t pos_ = 0;
};

// Recursive descent over: iff := imp ("<->" imp)* ; imp := or ("->" or)* with
// "->" right-associative ; or := and ("|" and)* ; and := unary ("&" unary)* ;
// unary := "!" unary | "(" formula ")" | atom | "top" | "bot".
class Parser {
 public:
  Parser(std::string_view src, const Signature& sig) : lexer_(src), sig_(sig) { advance(); }

  NodePtr parse() {
    NodePtr n = parse_iff();
    if (tok_.kind != Token::Kind::End) throw ParseError("unexpected trailing input", tok_.pos);
    return n;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  NodePtr parse_iff() {
    NodePtr lhs = parse_imp();
    while (tok_.kind == Token::Kind::Iff) {
      advance();
      lhs = make_node(Op::Iff, lhs, parse_imp());
    }
    return lhs;
  }

  NodePtr parse_imp() {
    NodePtr lhs = parse_or();
    if (tok_.kind == Token::Kind::Implies) {
      advance();
      return make_node(Op::Implies, lhs, parse_imp());
    }
    return lhs;
  }

  NodePtr parse_or() {
    NodePtr lhs = parse_and();
    while (tok_.kind == Token::Kind::Or) {
      advance();
      lhs = make_node(Op::Or, lhs, parse_and());
    }
    return lhs;
  }

  NodePtr parse_and() {
    NodePtr lhs = parse_unary();
    while (tok_.kind == Token::Kind::And) {
      advance();
      lhs = make_node(Op::And, lhs, parse_unary());
    }
    return lhs;
  }

  NodePtr parse_unary() {
    switch (tok_.kind) {
      case Token::Kind::Not: {
        advance();
        return make_node(Op::Not, parse_unary());
      }
      case Token::Kind::LParen: {
        const std::size_t open = tok_.pos;
        advance();
        NodePtr inner = parse_iff();
        if (tok_.kind != Token::Kind::RParen) throw ParseError("unmatched '('", open);
        advance();
        return inner;
      }
      case Token::Kind::Top:
        advance();
        return make_node(Op::Top);
      case Token::Kind::Bottom:
        advance();
        return make_node(Op::Bottom);
      case Token::Kind::Ident: {
        int k = sig_.index_of(tok_.text);
        if (k < 0) throw ParseError("unknown atom '" + std::string(tok_.text) + "'", tok_.pos);
        advance();
        return make_node(Op::Atom, nullptr, nullptr, k);
      }
      default:
        throw ParseError("expected a formula", tok_.pos);
    }
  }

  Lexer lexer_;
  const Signature& sig_;
  Token tok_{Token::Kind::End, "", 0};
};

int op_precedence(Op op) {
  switch (op) {
    case Op::Iff: return 0;
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    default: return 4;
  }
}

void render(const Formula::Node& n, const Signature& sig, int parent_prec, std::string& out) {
  const int prec = op_precedence(n.op);
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (n.op) {
    case Op::Top: out += "top"; break;
    case Op::Bottom: out += "bot"; break;
    case Op::Atom: out += sig.atom(n.atom); break;
    case Op::Not:
      out += '!';
      render(*n.lhs, sig, 4, out);
      break;
    case Op::And:
      render(*n.lhs, sig, prec, out);
      out += " & ";
      render(*n.rhs, sig, prec + 1, out);
      break;
    case Op::Or:
      render(*n.lhs, sig, prec, out);
      out += " | ";
      render(*n.rhs, sig, prec + 1, out);
      break;
    case Op::Implies:
      render(*n.lhs, sig, prec + 1, out);
      out += " -> ";
      render(*n.rhs, sig, prec, out);
      break;
    case Op::Iff:
      render(*n.lhs, sig, prec, out);
      out += " <-> ";
      render(*n.rhs, sig, prec + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula::Formula(NodePtr ast, Signature sig)
    : ast_(std::move(ast)), sig_(std::move(sig)), models_(eval_models(*ast_, sig_)) {}

Formula Formula::parse(std::string_view text, const Signature& sig) {
  return Formula(Parser(text, sig).parse(), sig);
}

Formula Formula::top(const Signature& sig) { return Formula(make_node(Op::Top), sig); }
Formula Formula::bottom(const Signature& sig) { return Formula(make_node(Op::Bottom), sig); }

// Disjunction of complete conjunctions, one per model, in world order.
Formula Formula::from_models(WorldMask models, const Signature& sig) {
  if (models == 0) return bottom(sig);
  if (models == sig.universe()) return top(sig);
  NodePtr dnf;
  for (int w = 0; w < sig.world_count(); ++w) {
    if (!(models & (WorldMask{1} << w))) continue;
    NodePtr term;
    for (int k = 0; k < sig.atom_count(); ++k) {
      NodePtr lit = make_node(Op::Atom, nullptr, nullptr, k);
      if (!((w >> k) & 1)) lit = make_node(Op::Not, lit);
      term = term ? make_node(Op::And, term, lit) : lit;
    }
    dnf = dnf ? make_node(Op::Or, dnf, term) : term;
  }
  return Formula(dnf, sig);
}

Formula formula_from_models(WorldMask models, const Signature& sig) {
  return Formula::from_models(models, sig);
}

std::string Formula::text() const {
  std::string out;
  render(*ast_, sig_, 0, out);
  return out;
}

Formula conj(const Formula& lhs, const Formula& rhs) {
  return Formula(make_node(Op::And, lhs.ast_, rhs.ast_), lhs.sig_);
}
Formula disj(const Formula& lhs, const Formula& rhs) {
  return Formula(make_node(Op::Or, lhs.ast_, rhs.ast_), lhs.sig_);
}
Formula neg(const Formula& operand) {
  return Formula(make_node(Op::Not, operand.ast_), operand.sig_);
}

}  // namespace bk
