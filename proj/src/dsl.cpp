/// @file dsl.cpp
/// Lexer, recursive-descent parser and canonical writer for model files.
#include "rbdkit/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "rbdkit/error.hpp"

namespace rbdkit {
namespace {

constexpr int kMaxNesting = 200;

enum class TokenKind { kIdent, kNumber, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string_view text;
  SourceSpan span;
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '-';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<ParseDiagnostic>& diags)
      : text_(text), diags_(diags) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == '\n') line_starts_.push_back(i + 1);
  }

  SourceSpan span(std::size_t start, std::size_t end) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), start);
    auto line = static_cast<int>(it - line_starts_.begin());
    SourceSpan s;
    s.start = start;
    s.end = end;
    s.line = line;
    s.column = static_cast<int>(start - line_starts_[line - 1]) + 1;
    return s;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text_.size();
    while (i < n) {
      char c = text_[i];
      if (c == '#') {
        while (i < n && text_[i] != '\n') ++i;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (ident_start(c)) {
        while (i < n && ident_char(text_[i])) ++i;
        out.push_back(make(TokenKind::kIdent, start, i));
        continue;
      }
      bool signed_number =
          (c == '+' || c == '-') && i + 1 < n &&
          (digit(text_[i + 1]) || text_[i + 1] == '.');
      if (digit(c) || c == '.' || signed_number) {
        if (signed_number) ++i;
        while (i < n && digit(text_[i])) ++i;
        if (i < n && text_[i] == '.') {
          ++i;
          while (i < n && digit(text_[i])) ++i;
        }
        if (i < n && (text_[i] == 'e' || text_[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < n && (text_[j] == '+' || text_[j] == '-')) ++j;
          if (j < n && digit(text_[j])) {
            i = j;
            while (i < n && digit(text_[i])) ++i;
          }
        }
        out.push_back(make(TokenKind::kNumber, start, i));
        continue;
      }
      if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',' ||
          c == ';' || c == '=') {
        ++i;
        out.push_back(make(TokenKind::kPunct, start, i));
        continue;
      }
      // Consume a whole UTF-8 sequence so the span covers the character.
      ++i;
      while (i < n && (static_cast<unsigned char>(text_[i]) & 0xC0) == 0x80) ++i;
      diags_.push_back({Severity::kError,
                        "unexpected character '" +
                            std::string(text_.substr(start, i - start)) + "'",
                        span(start, i)});
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.span = span(n, n);
    out.push_back(end);
    return out;
  }

 private:
  Token make(TokenKind kind, std::size_t start, std::size_t end) const {
    return {kind, text_.substr(start, end - start), span(start, end)};
  }

  std::string_view text_;
  std::vector<ParseDiagnostic>& diags_;
  std::vector<std::size_t> line_starts_;
};

// Thrown inside the parser to unwind to the enclosing declaration.
struct SyntaxError {
  ParseDiagnostic diag;
};

struct FieldValue {
  double value = 0.0;
  SourceSpan span;
};

struct LeafRef {
  std::string id;
  SourceSpan span;
};

struct EdgeRef {
  std::string component;
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    Lexer lexer(text_, diags_);
    tokens_ = lexer.run();
    eof_span_ = tokens_.back().span;

    while (peek().kind != TokenKind::kEnd) {
      try {
        if (is_ident("component")) {
          if (system_) error_at(peek().span, "declarations must precede the system declaration");
          parse_component();
        } else if (is_ident("network")) {
          if (system_) error_at(peek().span, "declarations must precede the system declaration");
          parse_network();
        } else if (is_ident("system")) {
          parse_system();
        } else {
          throw SyntaxError{{Severity::kError,
                             "expected 'component', 'network' or 'system', "
                             "found " + describe(peek()),
                             peek().span}};
        }
      } catch (const SyntaxError& e) {
        diags_.push_back(e.diag);
        recover();
      }
    }
    if (!system_ && !system_error_)
      error_at(eof_span_, "missing system declaration");

    resolve();

    ParseResult result;
    bool failed = std::any_of(diags_.begin(), diags_.end(), [](const auto& d) {
      return d.severity == Severity::kError;
    });
    if (!failed) {
      Model m;
      m.components = std::move(components_);
      if (system_is_network_) {
        m.system = std::move(*network_);
      } else {
        m.system = std::move(*system_);
      }
      result.model = std::move(m);
    }
    std::stable_sort(diags_.begin(), diags_.end(), [](const auto& a, const auto& b) {
      return a.span.start < b.span.start;
    });
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool is_ident(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::kIdent && peek(ahead).text == word;
  }
  bool is_punct(char c, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::kPunct && peek(ahead).text[0] == c;
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::kEnd) return "end of input";
    return "'" + std::string(t.text) + "'";
  }

  [[noreturn]] void expected(const std::string& what) const {
    throw SyntaxError{{Severity::kError,
                       "expected " + what + ", found " + describe(peek()),
                       peek().span}};
  }

  void expect_punct(char c) {
    if (!is_punct(c)) expected(std::string("'") + c + "'");
    advance();
  }
  void expect_keyword(std::string_view word) {
    if (!is_ident(word)) expected("'" + std::string(word) + "'");
    advance();
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().kind != TokenKind::kIdent) expected(what);
    return advance();
  }

  void error_at(const SourceSpan& span, std::string msg) {
    diags_.push_back({Severity::kError, std::move(msg), span});
  }
  void warn_at(const SourceSpan& span, std::string msg) {
    diags_.push_back({Severity::kWarning, std::move(msg), span});
  }

  // Skips to the next token that can start a declaration.
  void recover() {
    if (peek().kind != TokenKind::kEnd) advance();
    while (peek().kind != TokenKind::kEnd) {
      if ((is_ident("component") && peek(1).kind == TokenKind::kIdent) ||
          (is_ident("network") && is_punct('{', 1)) ||
          (is_ident("system") && is_punct('=', 1)))
        return;
      advance();
    }
  }

  // ---- numbers ----
  double number(const Token& t) {
    std::string_view s = t.text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range || (ec == std::errc() && !std::isfinite(v)))
      throw SyntaxError{{Severity::kError, "number out of range", t.span}};
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw SyntaxError{{Severity::kError, "malformed number '" + std::string(t.text) + "'", t.span}};
    return v;
  }

  // ---- components ----
  void parse_component() {
    advance();  // component
    const Token& id = expect_ident("component name");
    expect_punct('{');
    std::map<std::string, FieldValue, std::less<>> fields;
    do {
      const Token& name = expect_ident("field name");
      static const std::set<std::string_view> kFields = {
          "availability", "mtbf_h", "mdt_h", "mttres_h",
          "mldt_h",       "madt_h", "pnrs",  "tat_h"};
      if (!kFields.count(name.text))
        throw SyntaxError{{Severity::kError,
                           "unknown field '" + std::string(name.text) + "'",
                           name.span}};
      expect_punct('=');
      if (peek().kind != TokenKind::kNumber) expected("a number");
      const Token& num = advance();
      double v = number(num);
      if (fields.count(name.text))
        error_at(name.span, "duplicate field '" + std::string(name.text) + "'");
      fields.emplace(std::string(name.text), FieldValue{v, num.span});
    } while (is_punct(',') && (advance(), true));
    expect_punct('}');

    auto component = build_component(std::string(id.text), id.span, fields);
    if (!component) {
      failed_components_.emplace(id.text);
      return;
    }
    if (components_.count(component->id)) {
      error_at(id.span, "duplicate component '" + component->id + "'");
      return;
    }
    component_spans_.emplace(component->id, id.span);
    components_.emplace(component->id, std::move(*component));
  }

  std::optional<Component> build_component(
      std::string id, const SourceSpan& id_span,
      const std::map<std::string, FieldValue, std::less<>>& fields) {
    auto has = [&](const char* f) { return fields.count(f) > 0; };
    bool ok = true;
    auto duration = [&](const char* f, bool strictly_positive) {
      const FieldValue& fv = fields.at(f);
      if (strictly_positive ? !(fv.value > 0.0) : !(fv.value >= 0.0)) {
        error_at(fv.span, std::string(f) + (strictly_positive ? " must be > 0"
                                                              : " must be >= 0"));
        ok = false;
      }
      return fv.value;
    };
    auto probability = [&](const char* f) {
      const FieldValue& fv = fields.at(f);
      try {
        return Probability(fv.value);
      } catch (const ValidationError&) {
        error_at(fv.span, std::string(f) + " out of [0,1]");
        ok = false;
        return Probability();
      }
    };

    static const char* const kPipeline[] = {"mttres_h", "mldt_h", "madt_h",
                                            "pnrs", "tat_h"};
    std::size_t pipeline = 0;
    for (const char* f : kPipeline) pipeline += has(f);

    Component c;
    c.id = std::move(id);
    if (has("availability")) {
      if (fields.size() != 1) {
        error_at(id_span, "component '" + c.id +
                              "': availability cannot be combined with other fields");
        return std::nullopt;
      }
      c.spec = DirectAvailability{probability("availability")};
    } else if (has("mtbf_h") && has("mdt_h") && pipeline == 0) {
      double mtbf = duration("mtbf_h", true);
      double mdt = duration("mdt_h", false);
      c.spec = DerivedSimpleAvailability{mtbf, mdt};
    } else if (has("mtbf_h") && !has("mdt_h") && pipeline == 5) {
      DerivedAvailability d;
      d.mtbf = duration("mtbf_h", true);
      d.maint.mttres = duration("mttres_h", false);
      d.maint.mldt = duration("mldt_h", false);
      d.maint.madt = duration("madt_h", false);
      d.maint.pnrs = probability("pnrs");
      d.maint.tat = duration("tat_h", false);
      c.spec = d;
    } else {
      error_at(id_span, "component '" + c.id +
                            "': give availability, or mtbf_h with mdt_h, or "
                            "mtbf_h with all of mttres_h, mldt_h, madt_h, "
                            "pnrs, tat_h");
      return std::nullopt;
    }
    if (!ok) return std::nullopt;
    return c;
  }

  // ---- network ----
  void parse_network() {
    const Token& keyword = advance();
    if (network_) error_at(keyword.span, "only one network may be declared");
    expect_punct('{');
    Network net;
    expect_keyword("source");
    expect_punct('=');
    const Token& source = expect_ident("source node");
    net.source = std::string(source.text);
    expect_punct(',');
    expect_keyword("terminal");
    expect_punct('=');
    const Token& terminal = expect_ident("terminal node");
    net.terminal = std::string(terminal.text);
    if (net.source == net.terminal)
      error_at(terminal.span, "source and terminal must differ");
    net.nodes.insert(net.source);
    net.nodes.insert(net.terminal);

    std::map<std::string, int> uses;
    std::vector<EdgeRef> refs;
    if (!is_punct(',')) expected("',' followed by at least one edge");
    while (is_punct(',')) {
      advance();
      expect_keyword("edge");
      expect_punct('(');
      const Token& a = expect_ident("node name");
      expect_punct(',');
      const Token& b = expect_ident("node name");
      expect_punct(',');
      const Token& comp = expect_ident("component name");
      expect_punct(')');
      std::string cid(comp.text);
      int n = ++uses[cid];
      std::string edge_id = n == 1 ? cid : cid + "#" + std::to_string(n);
      net.add_edge(std::move(edge_id), std::string(a.text), std::string(b.text), cid);
      refs.push_back({cid, comp.span});
    }
    expect_punct('}');
    if (!network_) {
      network_ = std::move(net);
      network_span_ = keyword.span;
      edge_refs_ = std::move(refs);
    }
  }

  // ---- system ----
  void parse_system() {
    const Token& keyword = advance();
    if (system_ || system_error_) {
      error_at(keyword.span, "duplicate system declaration");
    }
    bool first = !system_ && !system_error_;
    system_error_ = true;  // cleared below on success
    expect_punct('=');
    if (is_ident("network") && !is_punct('(', 1)) {
      const Token& t = advance();
      if (first) {
        system_is_network_ = true;
        system_ = Block();
        system_error_ = false;
        if (!network_) network_ref_span_ = t.span;
      }
      return;
    }
    std::vector<LeafRef> refs;
    Block b = parse_block(refs, 0);
    if (first) {
      system_ = std::move(b);
      leaf_refs_ = std::move(refs);
      system_error_ = false;
    }
  }

  Block parse_block(std::vector<LeafRef>& refs, int depth) {
    if (depth > kMaxNesting)
      throw SyntaxError{{Severity::kError, "blocks nested too deeply", peek().span}};
    const Token& head = expect_ident("a component name or block");
    if (!is_punct('(')) {
      refs.push_back({std::string(head.text), head.span});
      return Block::leaf(std::string(head.text));
    }
    std::string_view kind = head.text;
    if (kind != "series" && kind != "parallel" && kind != "kofn" &&
        kind != "bridge")
      throw SyntaxError{{Severity::kError,
                         "unknown block type '" + std::string(kind) + "'",
                         head.span}};
    advance();  // (

    std::optional<Token> k_token;
    long k = 0;
    if (kind == "kofn") {
      if (peek().kind != TokenKind::kNumber) expected("an integer k");
      k_token = advance();
      std::string_view s = k_token->text;
      bool integral = !s.empty() && std::all_of(s.begin(), s.end(), digit);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
      if (!integral || ec != std::errc())
        throw SyntaxError{{Severity::kError, "k must be a positive integer",
                           k_token->span}};
      expect_punct(';');
    }

    std::vector<Block> children;
    children.push_back(parse_block(refs, depth + 1));
    while (is_punct(',')) {
      advance();
      children.push_back(parse_block(refs, depth + 1));
    }
    expect_punct(')');

    if (kind == "bridge") {
      if (children.size() != 5)
        throw SyntaxError{{Severity::kError,
                           "bridge needs exactly 5 blocks, got " +
                               std::to_string(children.size()),
                           head.span}};
      return Block::bridge(std::move(children));
    }
    if (children.size() < 2)
      throw SyntaxError{{Severity::kError,
                         std::string(kind) + " needs at least two blocks",
                         head.span}};
    if (kind == "series") return Block::series(std::move(children));
    if (kind == "parallel") return Block::parallel(std::move(children));

    auto n = static_cast<long>(children.size());
    if (k < 1) {
      error_at(k_token->span, "k must be at least 1");
    } else if (k > n) {
      error_at(k_token->span, "k exceeds N (k = " + std::to_string(k) +
                                  ", N = " + std::to_string(n) + ")");
    }
    return Block::k_of_n(static_cast<int>(std::clamp<long>(k, 0, n + 1)),
                         std::move(children));
  }

  // ---- cross-references ----
  void resolve() {
    std::set<std::string, std::less<>> used;
    auto check = [&](const std::string& id, const SourceSpan& span) {
      if (components_.count(id)) {
        used.insert(id);
      } else if (!failed_components_.count(id)) {
        error_at(span, "unresolved component '" + id + "'");
      }
    };
    if (system_ && system_is_network_) {
      if (!network_) {
        error_at(network_ref_span_, "system refers to a network but none is declared");
        return;
      }
      for (const auto& r : edge_refs_) check(r.component, r.span);
      if (!connected(*network_))
        warn_at(network_span_,
                "terminal is unreachable from source even with every "
                "component working; availability is 0");
    } else if (system_) {
      for (const auto& r : leaf_refs_) check(r.id, r.span);
      if (network_)
        warn_at(network_span_, "network is declared but the system does not use it");
    } else {
      return;
    }
    for (const auto& [id, span] : component_spans_)
      if (!used.count(id)) warn_at(span, "unused component '" + id + "'");
  }

  static bool connected(const Network& net) {
    std::set<std::string> seen{net.source};
    std::vector<std::string> stack{net.source};
    while (!stack.empty()) {
      std::string node = std::move(stack.back());
      stack.pop_back();
      for (const auto& e : net.edges) {
        const std::string* next = e.a == node ? &e.b : e.b == node ? &e.a : nullptr;
        if (next && seen.insert(*next).second) stack.push_back(*next);
      }
    }
    return seen.count(net.terminal) > 0;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SourceSpan eof_span_;
  std::vector<ParseDiagnostic> diags_;

  std::map<std::string, Component, std::less<>> components_;
  std::map<std::string, SourceSpan> component_spans_;
  std::set<std::string, std::less<>> failed_components_;

  std::optional<Network> network_;
  SourceSpan network_span_;
  std::vector<EdgeRef> edge_refs_;

  std::optional<Block> system_;
  bool system_error_ = false;
  bool system_is_network_ = false;
  SourceSpan network_ref_span_;
  std::vector<LeafRef> leaf_refs_;
};

// ---- writer ----

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_block(const Block& b, std::ostream& os) {
  switch (b.kind()) {
    case BlockKind::kLeaf:
      os << b.component_id();
      return;
    case BlockKind::kSeries:
    case BlockKind::kParallel:
    case BlockKind::kKofN:
      if (b.children().empty())
        throw StructureError(std::string(to_string(b.kind())) + " has no blocks");
      if (b.children().size() == 1) {
        write_block(b.children().front(), os);
        return;
      }
      break;
    case BlockKind::kBridge:
      break;
  }
  os << to_string(b.kind()) << '(';
  if (b.kind() == BlockKind::kKofN) os << b.k() << "; ";
  for (std::size_t i = 0; i < b.children().size(); ++i) {
    if (i) os << ", ";
    write_block(b.children()[i], os);
  }
  os << ')';
}

}  // namespace

ParseResult parse_model(std::string_view text) { return Parser(text).run(); }

std::string to_source(const Model& m) {
  std::ostringstream os;
  for (const auto& [id, c] : m.components) {
    os << "component " << id << " { ";
    if (const auto* d = std::get_if<DirectAvailability>(&c.spec)) {
      os << "availability = " << shortest(d->availability.value());
    } else if (const auto* s = std::get_if<DerivedSimpleAvailability>(&c.spec)) {
      os << "mtbf_h = " << shortest(s->mtbf) << ", mdt_h = " << shortest(s->mdt);
    } else {
      const auto& f = std::get<DerivedAvailability>(c.spec);
      os << "mtbf_h = " << shortest(f.mtbf)
         << ", mttres_h = " << shortest(f.maint.mttres)
         << ", mldt_h = " << shortest(f.maint.mldt)
         << ", madt_h = " << shortest(f.maint.madt)
         << ", pnrs = " << shortest(f.maint.pnrs.value())
         << ", tat_h = " << shortest(f.maint.tat);
    }
    os << " }\n";
  }
  if (const auto* net = std::get_if<Network>(&m.system)) {
    os << "network {\n  source = " << net->source
       << ", terminal = " << net->terminal;
    for (const auto& e : net->edges)
      os << ",\n  edge(" << e.a << ", " << e.b << ", " << e.component_id << ")";
    os << "\n}\nsystem = network\n";
  } else {
    os << "system = ";
    write_block(std::get<Block>(m.system), os);
    os << '\n';
  }
  return os.str();
}

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view file) {
  std::ostringstream os;
  os << file << ':' << d.span.line << ':' << d.span.column << ": "
     << to_string(d.severity) << ": " << d.message;
  return os.str();
}

}  // namespace rbdkit
