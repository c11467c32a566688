#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posfact/braid.hpp"
#include "posfact/framed_braid.hpp"
#include "posfact/surface.hpp"
#include "posfact/swap.hpp"

namespace posfact {

enum class DocumentKind { Braid, Framed, Twist, Swap };

/// One letter of a framed document: b<i>, delta(i,j), rho(i,j), M(i), Mb.
struct FramedToken {
  enum class Kind { Generator, Delta, Rho, M, Mb };
  Kind kind = Kind::Generator;
  int i = 0;
  int j = 0;
  int sign = 1;

  bool operator==(const FramedToken&) const = default;
};

FramedBraid evaluate(const std::vector<FramedToken>& tokens, int strands);

/// A parsed word file. Exactly one of the bodies is in use, selected by
/// kind.
///
///   # comment
///   @braid n=4            b1 b2^-1 b3^2
///   @framed n=4           delta(1,2) rho(1,3)^-1 M(2) Mb b1
///   @twist g=2 s=2 [l=0]  c1 d1^-1 img(c2 c3; c1) c(2,1) bd(F1,2)
///   @swap l=0             rho(2,4) rhoA(1,3; c1 d1^-1) sub(c2; F3) M(1) Mb
struct Document {
  DocumentKind kind = DocumentKind::Braid;
  int strands = 0;
  int genus = 0;
  int boundaries = 0;
  std::optional<int> layout;

  BraidWord braid;
  std::vector<FramedToken> framed;
  TwistWord twist;
  SwapWord swap;

  static Document of(BraidWord w);
  static Document of(std::vector<FramedToken> tokens, int strands);
  static Document of(TwistWord w);
  static Document of(SwapWord w);

  std::size_t size() const;
};

/// Syntax or validation error with a 1-based position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string token, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string token_;
};

Document parse(std::string_view text);

/// Canonical text: a comment line, the header, the tokens separated by
/// single spaces, and a trailing newline. Powers are written out letter by
/// letter and comments are dropped.
std::string print(const Document& d);

bool operator==(const Document& a, const Document& b);

/// Surface named by a twist header.
SurfacePtr twist_surface(int genus, int boundaries, std::optional<int> layout);

std::string to_string(DocumentKind kind);

}  // namespace posfact
