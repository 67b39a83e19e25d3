#pragma once

#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signil/cayley_io.hpp"
#include "signil/errors.hpp"
#include "signil/group.hpp"

namespace signil {

// Construction expressions:
//   C(12), D(8), Q8, GQ(16), S(4), A(5)
//   perm(5; (0 1 2)(3 4); (1 2))
//   C(2) x C(2) x S(3)
//   sd(C(7), C(3), [g1: 0 2 4 6 1 3 5])
//   table("k4.cayley")
// '#' starts a comment; one expression per file.

struct AstNode;
using AstPtr = std::shared_ptr<AstNode>;

struct AstNode {
  enum class Kind {
    cyclic,
    dihedral,
    q8,
    gq,
    symmetric,
    alternating,
    perm,
    product,
    semidirect,
    table
  };
  Kind kind = Kind::cyclic;
  std::uint32_t n = 0;  // order for C/D/GQ, degree for S/A/perm
  std::vector<std::vector<std::uint16_t>> perms;  // resolved, perm atoms
  std::vector<AstPtr> children;                   // product / semidirect
  // semidirect action entries: (generator number k of H, image list over N)
  std::vector<std::pair<std::uint32_t, std::vector<std::uint16_t>>> action;
  std::string path;  // table atoms, as written

  friend bool operator==(const AstNode &a, const AstNode &b)
  {
    if (a.kind != b.kind || a.n != b.n || a.perms != b.perms ||
        a.action != b.action || a.path != b.path ||
        a.children.size() != b.children.size())
      return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
      if (!(*a.children[i] == *b.children[i]))
        return false;
    return true;
  }
};

namespace detail {

struct Token {
  enum class Kind { ident, number, punct, str, eof } kind = Kind::eof;
  std::string text;
  std::uint64_t value = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string &src) : _s(src) { advance(); }

  const Token &peek() const { return _tok; }

  Token next()
  {
    Token t = _tok;
    advance();
    return t;
  }

private:
  void advance()
  {
    while (_i < _s.size()) {
      char c = _s[_i];
      if (c == '#') {
        while (_i < _s.size() && _s[_i] != '\n')
          ++_i;
      } else if (c == '\n') {
        ++_i;
        ++_line;
        _col = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++_i;
        ++_col;
      } else {
        break;
      }
    }
    _tok = Token{};
    _tok.line = _line;
    _tok.col = _col;
    if (_i >= _s.size()) {
      _tok.kind = Token::Kind::eof;
      return;
    }
    char c = _s[_i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      _tok.kind = Token::Kind::number;
      while (_i < _s.size() &&
             std::isdigit(static_cast<unsigned char>(_s[_i]))) {
        _tok.value = _tok.value * 10 + static_cast<std::uint64_t>(_s[_i] - '0');
        if (_tok.value > (1u << 24))
          throw SyntaxError("number too large", _line, _col);
        _tok.text.push_back(_s[_i]);
        take();
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      _tok.kind = Token::Kind::ident;
      while (_i < _s.size() &&
             (std::isalnum(static_cast<unsigned char>(_s[_i])))) {
        _tok.text.push_back(_s[_i]);
        take();
      }
      return;
    }
    if (c == '"') {
      _tok.kind = Token::Kind::str;
      take();
      while (_i < _s.size() && _s[_i] != '"' && _s[_i] != '\n') {
        _tok.text.push_back(_s[_i]);
        take();
      }
      if (_i >= _s.size() || _s[_i] != '"')
        throw SyntaxError("unterminated string", _tok.line, _tok.col);
      take();
      return;
    }
    if (std::string("(),;:[]").find(c) != std::string::npos) {
      _tok.kind = Token::Kind::punct;
      _tok.text.push_back(c);
      take();
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", _line,
                      _col);
  }

  void take()
  {
    ++_i;
    ++_col;
  }

  const std::string &_s;
  std::size_t _i = 0;
  int _line = 1, _col = 1;
  Token _tok;
};

class Parser {
public:
  explicit Parser(const std::string &src) : _lx(src) {}

  AstPtr parse()
  {
    AstPtr e = product();
    expect_eof();
    return e;
  }

private:
  [[noreturn]] void err(const std::string &msg, const Token &t)
  {
    throw SyntaxError(msg, t.line, t.col);
  }

  Token expect_punct(char c)
  {
    Token t = _lx.next();
    if (t.kind != Token::Kind::punct || t.text[0] != c)
      err(std::string("expected '") + c + "'", t);
    return t;
  }

  bool peek_punct(char c)
  {
    const Token &t = _lx.peek();
    return t.kind == Token::Kind::punct && t.text[0] == c;
  }

  std::uint32_t expect_number(const char *what)
  {
    Token t = _lx.next();
    if (t.kind != Token::Kind::number)
      err(std::string("expected ") + what, t);
    return static_cast<std::uint32_t>(t.value);
  }

  void expect_eof()
  {
    const Token &t = _lx.peek();
    if (t.kind != Token::Kind::eof)
      err("trailing input after expression", t);
  }

  AstPtr product()
  {
    AstPtr left = atom();
    while (_lx.peek().kind == Token::Kind::ident && _lx.peek().text == "x") {
      _lx.next();
      AstPtr right = atom();
      auto node = std::make_shared<AstNode>();
      node->kind = AstNode::Kind::product;
      node->children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  AstPtr atom()
  {
    Token t = _lx.next();
    if (t.kind == Token::Kind::punct && t.text[0] == '(') {
      AstPtr e = product();
      expect_punct(')');
      return e;
    }
    if (t.kind != Token::Kind::ident)
      err("expected a construction", t);
    auto node = std::make_shared<AstNode>();
    if (t.text == "C" || t.text == "D" || t.text == "GQ" || t.text == "S" ||
        t.text == "A") {
      node->kind = t.text == "C"   ? AstNode::Kind::cyclic
                   : t.text == "D" ? AstNode::Kind::dihedral
                   : t.text == "GQ" ? AstNode::Kind::gq
                   : t.text == "S" ? AstNode::Kind::symmetric
                                   : AstNode::Kind::alternating;
      expect_punct('(');
      node->n = expect_number("a number");
      expect_punct(')');
      return node;
    }
    if (t.text == "Q8") {
      node->kind = AstNode::Kind::q8;
      return node;
    }
    if (t.text == "perm") {
      node->kind = AstNode::Kind::perm;
      expect_punct('(');
      node->n = expect_number("the degree");
      if (node->n == 0 || node->n > kMaxOrder)
        err("bad permutation degree", t);
      while (peek_punct(';')) {
        _lx.next();
        node->perms.push_back(gen_perm(node->n));
      }
      expect_punct(')');
      return node;
    }
    if (t.text == "sd") {
      node->kind = AstNode::Kind::semidirect;
      expect_punct('(');
      node->children.push_back(product());
      expect_punct(',');
      node->children.push_back(product());
      expect_punct(',');
      expect_punct('[');
      node->action.push_back(action_entry());
      while (peek_punct(';')) {
        _lx.next();
        node->action.push_back(action_entry());
      }
      expect_punct(']');
      expect_punct(')');
      return node;
    }
    if (t.text == "table") {
      node->kind = AstNode::Kind::table;
      expect_punct('(');
      Token s = _lx.next();
      if (s.kind != Token::Kind::str)
        err("expected a quoted path", s);
      node->path = s.text;
      expect_punct(')');
      return node;
    }
    err("unknown construction '" + t.text + "'", t);
  }

  // cycles, composed left to right onto the identity; () is the identity
  std::vector<std::uint16_t> gen_perm(std::uint32_t degree)
  {
    std::vector<std::uint16_t> img(degree);
    for (std::uint32_t i = 0; i < degree; ++i)
      img[i] = static_cast<std::uint16_t>(i);
    if (!peek_punct('('))
      err("expected a cycle", _lx.peek());
    while (peek_punct('(')) {
      Token open = _lx.next();
      std::vector<std::uint16_t> cyc;
      std::vector<char> seen(degree, 0);
      while (_lx.peek().kind == Token::Kind::number) {
        std::uint32_t v = expect_number("a point");
        if (v >= degree)
          throw SyntaxError("point " + std::to_string(v) +
                                " outside degree " + std::to_string(degree),
                            open.line, open.col);
        if (seen[v])
          throw SyntaxError("repeated point in cycle", open.line, open.col);
        seen[v] = 1;
        cyc.push_back(static_cast<std::uint16_t>(v));
      }
      expect_punct(')');
      std::vector<std::uint16_t> cmap(degree);
      for (std::uint32_t i = 0; i < degree; ++i)
        cmap[i] = static_cast<std::uint16_t>(i);
      for (std::size_t i = 0; i < cyc.size(); ++i)
        cmap[cyc[i]] = cyc[(i + 1) % cyc.size()];
      img = compose_perm(img, cmap);
    }
    return img;
  }

  std::pair<std::uint32_t, std::vector<std::uint16_t>> action_entry()
  {
    Token t = _lx.next();
    if (t.kind != Token::Kind::ident || t.text.size() < 2 || t.text[0] != 'g')
      err("expected a generator reference like g1", t);
    std::uint32_t k = 0;
    for (std::size_t i = 1; i < t.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        err("expected a generator reference like g1", t);
      k = k * 10 + static_cast<std::uint32_t>(t.text[i] - '0');
    }
    if (k == 0)
      err("generator references are numbered from g1", t);
    expect_punct(':');
    std::vector<std::uint16_t> img;
    while (_lx.peek().kind == Token::Kind::number)
      img.push_back(static_cast<std::uint16_t>(expect_number("an image")));
    if (img.empty())
      err("empty image list in action", t);
    return {k, std::move(img)};
  }

  Lexer _lx;
};

inline void pretty_perm(std::ostream &os, const std::vector<std::uint16_t> &p)
{
  bool any = false;
  std::vector<char> done(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s)
      continue;
    any = true;
    os << '(';
    std::size_t x = s;
    bool first = true;
    do {
      if (!first)
        os << ' ';
      os << x;
      first = false;
      done[x] = 1;
      x = p[x];
    } while (x != s);
    os << ')';
  }
  if (!any)
    os << "()";
}

inline void pretty_node(std::ostream &os, const AstNode &node, bool in_product)
{
  switch (node.kind) {
  case AstNode::Kind::cyclic: os << "C(" << node.n << ")"; return;
  case AstNode::Kind::dihedral: os << "D(" << node.n << ")"; return;
  case AstNode::Kind::q8: os << "Q8"; return;
  case AstNode::Kind::gq: os << "GQ(" << node.n << ")"; return;
  case AstNode::Kind::symmetric: os << "S(" << node.n << ")"; return;
  case AstNode::Kind::alternating: os << "A(" << node.n << ")"; return;
  case AstNode::Kind::perm:
    os << "perm(" << node.n;
    for (const auto &p : node.perms) {
      os << "; ";
      pretty_perm(os, p);
    }
    os << ")";
    return;
  case AstNode::Kind::product:
    if (in_product)
      os << "(";
    pretty_node(os, *node.children[0], false);
    os << " x ";
    pretty_node(os, *node.children[1], true);
    if (in_product)
      os << ")";
    return;
  case AstNode::Kind::semidirect:
    os << "sd(";
    pretty_node(os, *node.children[0], false);
    os << ", ";
    pretty_node(os, *node.children[1], false);
    os << ", [";
    for (std::size_t i = 0; i < node.action.size(); ++i) {
      if (i)
        os << "; ";
      os << "g" << node.action[i].first << ":";
      for (auto v : node.action[i].second)
        os << " " << v;
    }
    os << "])";
    return;
  case AstNode::Kind::table: os << "table(\"" << node.path << "\")"; return;
  }
}

}  // namespace detail

inline AstPtr parse_gdsl(const std::string &text)
{
  return detail::Parser(text).parse();
}

inline std::string pretty_gdsl(const AstNode &ast)
{
  std::ostringstream os;
  detail::pretty_node(os, ast, false);
  return os.str();
}

// base_dir resolves table("...") references
inline Group elaborate(const AstNode &ast, const std::string &base_dir)
{
  switch (ast.kind) {
  case AstNode::Kind::cyclic:
    if (ast.n == 0)
      fail(errc::semantic_error, "C(n) needs n >= 1");
    return cyclic(ast.n);
  case AstNode::Kind::dihedral: return dihedral(ast.n);
  case AstNode::Kind::q8: return quaternion8();
  case AstNode::Kind::gq: return generalized_quaternion(ast.n);
  case AstNode::Kind::symmetric: return symmetric(ast.n);
  case AstNode::Kind::alternating: return alternating(ast.n);
  case AstNode::Kind::perm: return from_permutations(ast.n, ast.perms);
  case AstNode::Kind::product: {
    Group a = elaborate(*ast.children[0], base_dir);
    Group b = elaborate(*ast.children[1], base_dir);
    return direct_product(a, b);
  }
  case AstNode::Kind::semidirect: {
    Group n = elaborate(*ast.children[0], base_dir);
    Group h = elaborate(*ast.children[1], base_dir);
    Action act;
    for (const auto &[k, img] : ast.action) {
      if (k > h.gens().size())
        fail(errc::semantic_error,
             "action references g" + std::to_string(k) + " but " + h.name() +
                 " has " + std::to_string(h.gens().size()) + " generators");
      if (img.size() != n.order())
        fail(errc::semantic_error,
             "action image list has length " + std::to_string(img.size()) +
                 ", expected " + std::to_string(n.order()));
      act.generator_maps.emplace_back(h.gens()[k - 1], img);
    }
    return semidirect_product(n, h, act);
  }
  case AstNode::Kind::table: {
    std::string p = ast.path;
    if (!p.empty() && p[0] != '/' && !base_dir.empty())
      p = base_dir + "/" + p;
    return read_cayley_file(p);
  }
  }
  fail(errc::internal_inconsistency, "unhandled construction");
}

inline std::string file_stem(const std::string &path)
{
  std::string name = path;
  auto slash = name.find_last_of("/\\");
  if (slash != std::string::npos)
    name = name.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0)
    name.resize(dot);
  return name;
}

// dispatch on extension: .gdsl expressions, .cayley tables
inline Group load_group_file(const std::string &path)
{
  auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".cayley")
    return read_cayley_file(path);
  if (ext != ".gdsl")
    fail(errc::io_error, "unsupported group file '" + path + "'");
  std::ifstream in(path);
  if (!in)
    fail(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of("/\\");
  std::string dir = slash == std::string::npos ? "" : path.substr(0, slash);
  Group g = elaborate(*parse_gdsl(ss.str()), dir);
  g.set_name(file_stem(path));
  return g;
}

}  // namespace signil
