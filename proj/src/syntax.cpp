// Copyright 2026 The Paralogic Authors. All Rights Reserved.
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

#include "paralogic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "paralogic/errors.hpp"

namespace paralogic {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string found,
                       std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) +
            ": syntax error: unexpected " + found + ", expected " +
            join_expected(expected)),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Concept

struct Concept::Node {
  Kind kind;
  std::string name;
  Concept lhs;
  Concept rhs;
  std::size_t hash;
  bool quantifier_free;
};

Concept Concept::make(Kind kind, std::string name, const Concept* lhs,
                      const Concept* rhs) {
  std::size_t h = static_cast<std::size_t>(kind) + 1;
  h = mix(h, std::hash<std::string>{}(name));
  bool qf = kind != Kind::Exists && kind != Kind::Forall;
  Concept l{nullptr}, r{nullptr};
  if (lhs) {
    h = mix(h, lhs->hash());
    qf = qf && lhs->is_quantifier_free();
    l = *lhs;
  }
  if (rhs) {
    h = mix(h, rhs->hash());
    qf = qf && rhs->is_quantifier_free();
    r = *rhs;
  }
  return Concept(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(l), std::move(r), h, qf}));
}

Concept::Concept() : Concept(top()) {}

Concept Concept::atomic(std::string name) {
  return make(Kind::Atomic, std::move(name), nullptr, nullptr);
}

Concept Concept::top() {
  static const Concept c = make(Kind::Top, "", nullptr, nullptr);
  return c;
}

Concept Concept::bottom() {
  static const Concept c = make(Kind::Bottom, "", nullptr, nullptr);
  return c;
}

Concept Concept::negation(Concept operand) {
  return make(Kind::Not, "", &operand, nullptr);
}

Concept Concept::conjunction(Concept lhs, Concept rhs) {
  return make(Kind::And, "", &lhs, &rhs);
}

Concept Concept::disjunction(Concept lhs, Concept rhs) {
  return make(Kind::Or, "", &lhs, &rhs);
}

Concept Concept::exists(std::string role, Concept filler) {
  return make(Kind::Exists, std::move(role), &filler, nullptr);
}

Concept Concept::forall(std::string role, Concept filler) {
  return make(Kind::Forall, std::move(role), &filler, nullptr);
}

Concept::Kind Concept::kind() const { return node_->kind; }
bool Concept::is_quantifier_free() const { return node_->quantifier_free; }
const std::string& Concept::name() const { return node_->name; }
std::size_t Concept::hash() const { return node_->hash; }
const Concept& Concept::lhs() const { return node_->lhs; }
const Concept& Concept::rhs() const { return node_->rhs; }

void Concept::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Atomic:
      out.insert(name());
      break;
    case Kind::Top:
    case Kind::Bottom:
      break;
    case Kind::And:
    case Kind::Or:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
      break;
    case Kind::Not:
    case Kind::Exists:
    case Kind::Forall:
      lhs().collect_atoms(out);
      break;
  }
}

void Concept::collect_roles(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Atomic:
    case Kind::Top:
    case Kind::Bottom:
      break;
    case Kind::And:
    case Kind::Or:
      lhs().collect_roles(out);
      rhs().collect_roles(out);
      break;
    case Kind::Not:
      lhs().collect_roles(out);
      break;
    case Kind::Exists:
    case Kind::Forall:
      out.insert(name());
      lhs().collect_roles(out);
      break;
  }
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  switch (a.kind()) {
    case Concept::Kind::Atomic:
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
      return std::strong_ordering::equal;
    case Concept::Kind::Not:
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      return a.lhs() <=> b.lhs();
    case Concept::Kind::And:
    case Concept::Kind::Or:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Proposition

Proposition Proposition::subsumption(Concept lhs, Concept rhs) {
  Proposition p;
  p.kind_ = Kind::Subsumption;
  p.lhs_ = std::move(lhs);
  p.rhs_ = std::move(rhs);
  return p;
}

Proposition Proposition::equality(Concept lhs, Concept rhs) {
  Proposition p;
  p.kind_ = Kind::Equality;
  p.lhs_ = std::move(lhs);
  p.rhs_ = std::move(rhs);
  return p;
}

Proposition Proposition::concept_assertion(std::string individual,
                                           Concept c) {
  Proposition p;
  p.kind_ = Kind::ConceptAssertion;
  p.subject_ = std::move(individual);
  p.lhs_ = std::move(c);
  return p;
}

Proposition Proposition::concept_assertion(const AtomicAssertion& a) {
  return concept_assertion(a.individual, Concept::atomic(a.concept_name));
}

Proposition Proposition::role_assertion(std::string subject,
                                        std::string object, std::string role) {
  Proposition p;
  p.kind_ = Kind::RoleAssertion;
  p.subject_ = std::move(subject);
  p.object_ = std::move(object);
  p.role_ = std::move(role);
  return p;
}

std::optional<AtomicAssertion> Proposition::as_atomic_assertion() const {
  if (!is_atomic_assertion()) return std::nullopt;
  return AtomicAssertion{subject_, lhs_.name()};
}

bool Proposition::is_quantifier_free() const {
  switch (kind_) {
    case Kind::Subsumption:
    case Kind::Equality:
      return lhs_.is_quantifier_free() && rhs_.is_quantifier_free();
    case Kind::ConceptAssertion:
      return lhs_.is_quantifier_free();
    case Kind::RoleAssertion:
      return true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// KnowledgeBase / Signature

KnowledgeBase::KnowledgeBase(std::initializer_list<Proposition> props) {
  for (const auto& p : props) add(p);
}

bool KnowledgeBase::add(const Proposition& p) {
  if (!index_.insert(p).second) return false;
  statements_.push_back(p);
  return true;
}

bool KnowledgeBase::contains(const Proposition& p) const {
  return index_.count(p) > 0;
}

std::vector<Proposition> KnowledgeBase::tbox() const {
  std::vector<Proposition> out;
  for (const auto& p : statements_)
    if (p.is_axiom()) out.push_back(p);
  return out;
}

std::vector<Proposition> KnowledgeBase::abox() const {
  std::vector<Proposition> out;
  for (const auto& p : statements_)
    if (p.is_assertion()) out.push_back(p);
  return out;
}

bool KnowledgeBase::is_quantifier_free() const {
  for (const auto& p : statements_)
    if (!p.is_quantifier_free()) return false;
  return true;
}

void Signature::add(const Concept& c) {
  c.collect_atoms(atomic_concepts);
  c.collect_roles(roles);
}

void Signature::add(const Proposition& p) {
  switch (p.kind()) {
    case Proposition::Kind::Subsumption:
    case Proposition::Kind::Equality:
      add(p.lhs());
      add(p.rhs());
      break;
    case Proposition::Kind::ConceptAssertion:
      individuals.insert(p.individual());
      add(p.concept_expr());
      break;
    case Proposition::Kind::RoleAssertion:
      individuals.insert(p.subject());
      individuals.insert(p.object());
      roles.insert(p.role());
      break;
  }
}

Signature signature_of(const KnowledgeBase& kb) {
  Signature sig;
  for (const auto& p : kb.propositions()) sig.add(p);
  return sig;
}

Signature signature_of(const KnowledgeBase& kb, const Proposition& query) {
  Signature sig = signature_of(kb);
  sig.add(query);
  return sig;
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok {
  Ident,
  Top,
  Bot,
  Exists,
  Forall,
  Tilde,
  Amp,
  Bar,
  Dot,
  SubsumedBy,
  Equals,
  Colon,
  Comma,
  LParen,
  RParen,
  End
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Exists: return "'exists'";
    case Tok::Forall: return "'forall'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Dot: return "'.'";
    case Tok::SubsumedBy: return "'<='";
    case Tok::Equals: return "'=='";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          word += src_[pos_];
          advance();
        }
        Tok kind = Tok::Ident;
        if (word == "top") kind = Tok::Top;
        else if (word == "bot") kind = Tok::Bot;
        else if (word == "exists") kind = Tok::Exists;
        else if (word == "forall") kind = Tok::Forall;
        out.push_back({kind, std::move(word), line, col});
        continue;
      }
      auto single = [&](Tok kind) {
        out.push_back({kind, std::string(1, c), line, col});
        advance();
      };
      switch (c) {
        case '~': single(Tok::Tilde); continue;
        case '&': single(Tok::Amp); continue;
        case '|': single(Tok::Bar); continue;
        case '.': single(Tok::Dot); continue;
        case ':': single(Tok::Colon); continue;
        case ',': single(Tok::Comma); continue;
        case '(': single(Tok::LParen); continue;
        case ')': single(Tok::RParen); continue;
        default: break;
      }
      if (c == '<' && peek(1) == '=') {
        advance();
        advance();
        out.push_back({Tok::SubsumedBy, "<=", line, col});
        continue;
      }
      if (c == '=' && peek(1) == '=') {
        advance();
        advance();
        out.push_back({Tok::Equals, "==", line, col});
        continue;
      }
      std::string shown;
      if (std::isprint(static_cast<unsigned char>(c))) {
        shown = std::string("character '") + c + "'";
      } else {
        std::ostringstream os;
        os << "byte 0x" << std::hex
           << static_cast<int>(static_cast<unsigned char>(c));
        shown = os.str();
      }
      throw ParseError(line, col, shown, {"a token"});
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  bool at_end() const { return cur().kind == Tok::End; }

  Concept top_level_concept() {
    Concept acc = concept_expr();
    if (cur().kind != Tok::Amp && cur().kind != Tok::Bar) return acc;
    const Tok op = cur().kind;
    while (cur().kind == op) {
      ++pos_;
      Concept rhs = concept_expr();
      acc = op == Tok::Amp ? Concept::conjunction(std::move(acc), std::move(rhs))
                           : Concept::disjunction(std::move(acc), std::move(rhs));
    }
    if (cur().kind == Tok::Amp || cur().kind == Tok::Bar)
      fail({"parentheses around mixed '&' and '|'"});
    return acc;
  }

  Proposition statement() {
    if (cur().kind == Tok::Ident && peek(1).kind == Tok::Colon) {
      std::string individual = cur().text;
      pos_ += 2;
      return Proposition::concept_assertion(std::move(individual),
                                            top_level_concept());
    }
    if (cur().kind == Tok::LParen && peek(1).kind == Tok::Ident &&
        peek(2).kind == Tok::Comma) {
      ++pos_;
      std::string subject = expect(Tok::Ident).text;
      expect(Tok::Comma);
      std::string object = expect(Tok::Ident).text;
      expect(Tok::RParen);
      expect(Tok::Colon);
      std::string role = expect(Tok::Ident).text;
      return Proposition::role_assertion(std::move(subject), std::move(object),
                                         std::move(role));
    }
    Concept lhs = top_level_concept();
    if (cur().kind == Tok::SubsumedBy) {
      ++pos_;
      return Proposition::subsumption(std::move(lhs), top_level_concept());
    }
    if (cur().kind == Tok::Equals) {
      ++pos_;
      return Proposition::equality(std::move(lhs), top_level_concept());
    }
    if (cur().kind == Tok::Colon && lhs.is_atomic())
      fail({describe(Tok::SubsumedBy), describe(Tok::Equals)});
    fail({describe(Tok::SubsumedBy), describe(Tok::Equals), describe(Tok::Amp),
          describe(Tok::Bar)});
  }

  Token expect(Tok kind) {
    if (cur().kind != kind) fail({describe(kind)});
    return toks_[pos_++];
  }

  void accept(Tok kind) {
    if (cur().kind == kind) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = cur();
    std::string found = t.kind == Tok::End ? describe(Tok::End)
                                           : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(found), std::move(expected));
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t ahead) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  Concept concept_expr() {
    switch (cur().kind) {
      case Tok::Top:
        ++pos_;
        return Concept::top();
      case Tok::Bot:
        ++pos_;
        return Concept::bottom();
      case Tok::Ident:
        return Concept::atomic(toks_[pos_++].text);
      case Tok::Tilde:
        ++pos_;
        return Concept::negation(concept_expr());
      case Tok::Exists:
      case Tok::Forall: {
        const bool is_exists = cur().kind == Tok::Exists;
        ++pos_;
        std::string role = expect(Tok::Ident).text;
        expect(Tok::Dot);
        Concept filler = concept_expr();
        return is_exists ? Concept::exists(std::move(role), std::move(filler))
                         : Concept::forall(std::move(role), std::move(filler));
      }
      case Tok::LParen: {
        ++pos_;
        Concept lhs = concept_expr();
        if (cur().kind != Tok::Amp && cur().kind != Tok::Bar)
          fail({describe(Tok::Amp), describe(Tok::Bar)});
        const bool is_and = cur().kind == Tok::Amp;
        ++pos_;
        Concept rhs = concept_expr();
        expect(Tok::RParen);
        return is_and ? Concept::conjunction(std::move(lhs), std::move(rhs))
                      : Concept::disjunction(std::move(lhs), std::move(rhs));
      }
      default:
        fail({"identifier", describe(Tok::Top), describe(Tok::Bot),
              describe(Tok::Tilde), describe(Tok::LParen),
              describe(Tok::Exists), describe(Tok::Forall)});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Concept parse_concept(std::string_view text) {
  Parser p(text);
  Concept c = p.top_level_concept();
  p.expect(Tok::End);
  return c;
}

Proposition parse_proposition(std::string_view text) {
  Parser p(text);
  Proposition prop = p.statement();
  p.accept(Tok::Dot);
  p.expect(Tok::End);
  return prop;
}

KnowledgeBase parse_kb(std::string_view text) {
  Parser p(text);
  KnowledgeBase kb;
  while (!p.at_end()) {
    kb.add(p.statement());
    p.expect(Tok::Dot);
  }
  return kb;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void write(std::string& out, const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Atomic:
      out += c.name();
      return;
    case Concept::Kind::Top:
      out += "top";
      return;
    case Concept::Kind::Bottom:
      out += "bot";
      return;
    case Concept::Kind::Not:
      out += '~';
      write(out, c.lhs());
      return;
    case Concept::Kind::And:
    case Concept::Kind::Or:
      out += '(';
      write(out, c.lhs());
      out += c.kind() == Concept::Kind::And ? " & " : " | ";
      write(out, c.rhs());
      out += ')';
      return;
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      out += c.kind() == Concept::Kind::Exists ? "exists " : "forall ";
      out += c.name();
      out += '.';
      write(out, c.lhs());
      return;
  }
}

}  // namespace

std::string serialize(const Concept& c) {
  std::string out;
  write(out, c);
  return out;
}

std::string serialize(const Proposition& p) {
  switch (p.kind()) {
    case Proposition::Kind::Subsumption:
      return serialize(p.lhs()) + " <= " + serialize(p.rhs());
    case Proposition::Kind::Equality:
      return serialize(p.lhs()) + " == " + serialize(p.rhs());
    case Proposition::Kind::ConceptAssertion:
      return p.individual() + " : " + serialize(p.concept_expr());
    case Proposition::Kind::RoleAssertion:
      return "(" + p.subject() + ", " + p.object() + ") : " + p.role();
  }
  return {};
}

std::string serialize(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& p : kb.propositions()) {
    out += serialize(p);
    out += ".\n";
  }
  return out;
}

std::string serialize(const AtomicAssertion& a) {
  return a.individual + ":" + a.concept_name;
}

std::ostream& operator<<(std::ostream& os, const Concept& c) {
  return os << serialize(c);
}

std::ostream& operator<<(std::ostream& os, const Proposition& p) {
  return os << serialize(p);
}

}  // namespace paralogic
