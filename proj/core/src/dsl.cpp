#include "posfact/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <utility>

namespace posfact {

FramedBraid evaluate(const std::vector<FramedToken>& tokens, int strands) {
  FramedBraid out(strands);
  for (const auto& t : tokens) {
    FramedBraid x(strands);
    switch (t.kind) {
      case FramedToken::Kind::Generator:
        x = FramedBraid(BraidWord::generator(strands, t.i), std::vector<std::int64_t>(strands, 0));
        break;
      case FramedToken::Kind::Delta:
        x = delta_framed(t.i, t.j, strands);
        break;
      case FramedToken::Kind::Rho:
        x = rho_framed(t.i, t.j, strands);
        break;
      case FramedToken::Kind::M:
        x = boundary_framing(strands, t.i);
        break;
      case FramedToken::Kind::Mb:
        x = boundary_multitwist_framed(strands);
        break;
    }
    out = fcompose(out, t.sign > 0 ? x : finverse(x));
  }
  return out;
}

Document Document::of(BraidWord w) {
  Document d;
  d.kind = DocumentKind::Braid;
  d.strands = w.strands();
  d.braid = std::move(w);
  return d;
}

Document Document::of(std::vector<FramedToken> tokens, int strands) {
  Document d;
  d.kind = DocumentKind::Framed;
  d.strands = strands;
  d.framed = std::move(tokens);
  return d;
}

Document Document::of(TwistWord w) {
  Document d;
  d.kind = DocumentKind::Twist;
  d.genus = w.surface()->genus();
  d.boundaries = w.surface()->boundaries();
  d.layout = w.surface()->layout();
  d.twist = std::move(w);
  return d;
}

Document Document::of(SwapWord w) {
  Document d;
  d.kind = DocumentKind::Swap;
  d.layout = w.layout()->l();
  d.swap = std::move(w);
  return d;
}

std::size_t Document::size() const {
  switch (kind) {
    case DocumentKind::Braid:
      return braid.size();
    case DocumentKind::Framed:
      return framed.size();
    case DocumentKind::Twist:
      return twist.size();
    case DocumentKind::Swap:
      return swap.size();
  }
  return 0;
}

ParseError::ParseError(int line, int column, std::string token, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message + (token.empty() ? "" : " at '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

SurfacePtr twist_surface(int genus, int boundaries, std::optional<int> layout) {
  if (!layout) return make_surface(genus, boundaries);
  const auto lay = make_layout(*layout);
  if (boundaries != 2) throw std::invalid_argument("layout surfaces have two boundary components");
  return lay->host_surface(genus);
}

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Braid:
      return "braid";
    case DocumentKind::Framed:
      return "framed";
    case DocumentKind::Twist:
      return "twist";
    case DocumentKind::Swap:
      return "swap";
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Document document() {
    skip_space();
    if (at_end()) fail("missing header");
    const std::size_t header_start = pos_;
    if (peek() != '@') fail("expected a header line starting with '@'");
    ++pos_;
    const auto kind_name = identifier();
    std::map<std::string, std::pair<int, std::size_t>> params;
    while (!at_end() && peek() != '\n') {
      skip_inline_space();
      if (at_end() || peek() == '\n' || peek() == '#') break;
      const std::size_t at = pos_;
      const auto key = identifier();
      if (key.empty()) fail("expected a header parameter");
      expect("=");
      if (params.contains(key)) fail_at(at, "duplicate header parameter");
      params[key] = {integer(), at};
    }
    skip_comment();

    const auto take = [&](const std::string& key, bool required) -> std::optional<int> {
      auto it = params.find(key);
      if (it == params.end()) {
        if (required) fail_at(header_start, "header is missing " + key + "=");
        return std::nullopt;
      }
      const int v = it->second.first;
      params.erase(it);
      return v;
    };

    Document d;
    if (kind_name == "braid" || kind_name == "framed") {
      d.kind = kind_name == "braid" ? DocumentKind::Braid : DocumentKind::Framed;
      d.strands = *take("n", true);
      if (d.strands < 1) fail_at(header_start, "strand count must be positive");
    } else if (kind_name == "twist") {
      d.kind = DocumentKind::Twist;
      d.genus = *take("g", true);
      d.boundaries = *take("s", true);
      d.layout = take("l", false);
    } else if (kind_name == "swap") {
      d.kind = DocumentKind::Swap;
      d.layout = take("l", true);
    } else {
      fail_at(header_start, "unknown document kind '" + kind_name + "'");
    }
    if (!params.empty()) fail_at(params.begin()->second.second, "unknown header parameter");

    switch (d.kind) {
      case DocumentKind::Braid:
        d.braid = braid_body(d.strands);
        break;
      case DocumentKind::Framed:
        d.framed = framed_body(d.strands);
        break;
      case DocumentKind::Twist: {
        SurfacePtr surface;
        try {
          surface = twist_surface(d.genus, d.boundaries, d.layout);
        } catch (const std::invalid_argument& e) {
          fail_at(header_start, e.what());
        }
        d.twist = twist_word(surface, false);
        break;
      }
      case DocumentKind::Swap: {
        LayoutPtr layout;
        try {
          layout = make_layout(*d.layout);
        } catch (const std::invalid_argument& e) {
          fail_at(header_start, e.what());
        }
        d.swap = swap_body(layout);
        break;
      }
    }
    skip_space();
    if (!at_end()) fail("unexpected input");
    return d;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        line_start = k + 1;
      }
    }
    std::size_t end = at;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
    throw ParseError(line, static_cast<int>(at - line_start) + 1,
                     std::string(text_.substr(at, end - at)), message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  void skip_comment() {
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') ++pos_;
    }
  }
  void skip_inline_space() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r') ++pos_;
  }
  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        ++pos_;
      } else if (peek() == '#') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    int value = 0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) fail_at(start, "expected an integer");
    return value;
  }

  // Inside parentheses: optional spaces around separators.
  void separator(char c) {
    skip_inline_space();
    expect(std::string_view(&c, 1));
    skip_inline_space();
  }

  /// Exponent from an attached ^k or ^-k suffix; 1 if absent.
  int suffix() {
    if (peek() != '^') {
      if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ')' &&
          peek() != ';' && peek() != '#') {
        fail("unexpected character after token");
      }
      return 1;
    }
    const std::size_t at = pos_;
    ++pos_;
    const int k = integer();
    if (k == 0) fail_at(at, "exponent must be non-zero");
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ')' &&
        peek() != ';' && peek() != '#') {
      fail("unexpected character after exponent");
    }
    return k;
  }

  /// Skips whitespace and comments; returns false at a terminator.
  bool next_token(bool nested) {
    skip_space();
    if (at_end()) return false;
    if (nested && (peek() == ';' || peek() == ')')) return false;
    if (peek() == '^') fail("detached exponent suffix");
    if (!nested && (peek() == ';' || peek() == ')')) fail("unexpected '" + std::string(1, peek()) + "'");
    return true;
  }

  BraidWord braid_body(int strands) {
    BraidWord w(strands);
    while (next_token(false)) {
      const std::size_t at = pos_;
      if (peek() != 'b' || !std::isdigit(static_cast<unsigned char>(peek(1)))) {
        fail("expected a generator b<i>");
      }
      ++pos_;
      const int index = integer();
      const int k = suffix();
      if (index < 1 || index >= strands) fail_at(at, "generator out of range");
      for (int r = 0; r < std::abs(k); ++r) w.push_back({index, k > 0 ? 1 : -1});
    }
    return w;
  }

  std::pair<int, int> pair_args() {
    const int i = integer();
    separator(',');
    const int j = integer();
    skip_inline_space();
    expect(")");
    return {i, j};
  }

  std::vector<FramedToken> framed_body(int strands) {
    std::vector<FramedToken> out;
    while (next_token(false)) {
      const std::size_t at = pos_;
      FramedToken t;
      if (starts_with("delta(") || starts_with("rho(")) {
        t.kind = starts_with("delta(") ? FramedToken::Kind::Delta : FramedToken::Kind::Rho;
        pos_ += t.kind == FramedToken::Kind::Delta ? 6 : 4;
        std::tie(t.i, t.j) = pair_args();
        if (t.i < 1 || t.j <= t.i || t.j > strands ||
            (t.kind == FramedToken::Kind::Delta && t.j != t.i + 1)) {
          fail_at(at, "swap indices out of range");
        }
      } else if (starts_with("Mb")) {
        t.kind = FramedToken::Kind::Mb;
        pos_ += 2;
      } else if (starts_with("M(")) {
        t.kind = FramedToken::Kind::M;
        pos_ += 2;
        t.i = integer();
        expect(")");
        if (t.i < 1 || t.i > strands) fail_at(at, "strand out of range");
      } else if (peek() == 'b' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
        t.i = integer();
        if (t.i < 1 || t.i >= strands) fail_at(at, "generator out of range");
      } else {
        fail("unknown framed token");
      }
      const int k = suffix();
      t.sign = k > 0 ? 1 : -1;
      for (int r = 0; r < std::abs(k); ++r) out.push_back(t);
    }
    return out;
  }

  NamedCurve named_curve() {
    const std::size_t at = pos_;
    if (starts_with("bd(F")) {
      pos_ += 4;
      auto [i, s] = pair_args();
      return NamedCurve::sub_boundary(i, s);
    }
    if (starts_with("delta")) {
      pos_ += 5;
      return NamedCurve::boundary(integer());
    }
    if (starts_with("c(") || starts_with("d(")) {
      const bool chain = peek() == 'c';
      pos_ += 2;
      auto [i, k] = pair_args();
      return chain ? NamedCurve::sub_chain(i, k) : NamedCurve::sub_d(i, k);
    }
    if ((peek() == 'c' || peek() == 'd') && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      const bool chain = peek() == 'c';
      ++pos_;
      const int k = integer();
      return chain ? NamedCurve::chain(k) : NamedCurve::d(k);
    }
    fail_at(at, "unknown curve tag");
  }

  Curve curve(const SurfacePtr& surface) {
    if (starts_with("img(")) {
      pos_ += 4;
      auto conj = twist_word(surface, true);
      separator(';');
      const auto base = named_curve();
      skip_inline_space();
      expect(")");
      return derived(conj, base);
    }
    return Curve{named_curve(), nullptr};
  }

  TwistWord twist_word(const SurfacePtr& surface, bool nested) {
    TwistWord w(surface);
    while (next_token(nested)) {
      const std::size_t at = pos_;
      const auto c = curve(surface);
      const int k = suffix();
      try {
        for (int r = 0; r < std::abs(k); ++r) w.push_back({c, k > 0 ? 1 : -1});
      } catch (const std::invalid_argument& e) {
        fail_at(at, e.what());
      }
    }
    return w;
  }

  SwapWord swap_body(const LayoutPtr& layout) {
    SwapWord w(layout);
    while (next_token(false)) {
      const std::size_t at = pos_;
      SwapLetter letter;
      if (starts_with("rhoA(")) {
        pos_ += 5;
        const int i = integer();
        separator(',');
        const int j = integer();
        separator(';');
        auto a = twist_word(layout->subsurface(), true);
        skip_inline_space();
        expect(")");
        letter = SwapLetter::rho_a(i, j, std::move(a));
      } else if (starts_with("rho(") || starts_with("delta(")) {
        const bool rho = starts_with("rho(");
        pos_ += rho ? 4 : 6;
        auto [i, j] = pair_args();
        letter = rho ? SwapLetter::rho(i, j) : SwapLetter::delta(i, j);
      } else if (starts_with("sub(")) {
        pos_ += 4;
        auto a = twist_word(layout->subsurface(), true);
        separator(';');
        expect("F");
        const int i = integer();
        skip_inline_space();
        expect(")");
        letter = SwapLetter::sub(std::move(a), i);
      } else if (starts_with("Mb")) {
        pos_ += 2;
        letter = SwapLetter::mb();
      } else if (starts_with("M(")) {
        pos_ += 2;
        const int i = integer();
        expect(")");
        letter = SwapLetter::m(i);
      } else {
        fail("unknown swap token");
      }
      const int k = suffix();
      letter.sign = k > 0 ? 1 : -1;
      try {
        for (int r = 0; r < std::abs(k); ++r) w.push_back(letter);
      } catch (const std::invalid_argument& e) {
        fail_at(at, e.what());
      }
    }
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string framed_token(const FramedToken& t) {
  std::string out;
  const auto pair = "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
  switch (t.kind) {
    case FramedToken::Kind::Generator:
      out = "b" + std::to_string(t.i);
      break;
    case FramedToken::Kind::Delta:
      out = "delta" + pair;
      break;
    case FramedToken::Kind::Rho:
      out = "rho" + pair;
      break;
    case FramedToken::Kind::M:
      out = "M(" + std::to_string(t.i) + ")";
      break;
    case FramedToken::Kind::Mb:
      out = "Mb";
      break;
  }
  return t.sign < 0 ? out + "^-1" : out;
}

}  // namespace

Document parse(std::string_view text) { return Parser(text).document(); }

std::string print(const Document& d) {
  std::string out = "# composition is right to left: the rightmost letter acts first\n";
  std::string body;
  switch (d.kind) {
    case DocumentKind::Braid:
      out += "@braid n=" + std::to_string(d.strands) + "\n";
      body = to_string(d.braid);
      break;
    case DocumentKind::Framed:
      out += "@framed n=" + std::to_string(d.strands) + "\n";
      for (const auto& t : d.framed) {
        if (!body.empty()) body += ' ';
        body += framed_token(t);
      }
      break;
    case DocumentKind::Twist:
      out += "@twist g=" + std::to_string(d.genus) + " s=" + std::to_string(d.boundaries);
      if (d.layout) out += " l=" + std::to_string(*d.layout);
      out += "\n";
      body = to_string(d.twist);
      break;
    case DocumentKind::Swap:
      out += "@swap l=" + std::to_string(*d.layout) + "\n";
      body = to_string(d.swap);
      break;
  }
  return out + body + "\n";
}

bool operator==(const Document& a, const Document& b) { return print(a) == print(b); }

}  // namespace posfact
