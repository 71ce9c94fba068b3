#include <gtest/gtest.h>

#include "grasscoh/error.hpp"
#include "grasscoh/parser.hpp"

using namespace grasscoh;
using namespace grasscoh::bundles;

TEST(Parser, Atoms) {
  EXPECT_EQ(parse_bundle("Q"), BundleExpr(IrreducibleWeight({1, 0}, {0, 0, 0})));
  EXPECT_EQ(parse_bundle("O(1)"), BundleExpr(IrreducibleWeight({1, 1}, {0, 0, 0})));
  EXPECT_EQ(parse_bundle("O"), O());
  EXPECT_EQ(parse_bundle("Sd"), Sd());
  EXPECT_EQ(parse_bundle("S"), S());
  EXPECT_EQ(parse_bundle("W(2,0;0,0,0)"), Sym2Q());
}

TEST(Parser, WedgeSquareOfSdualIsTwistedS) {
  EXPECT_EQ(parse_bundle("Wedge^2 Sd"), BundleExpr(IrreducibleWeight({0, 0}, {1, 1, 0})));
  EXPECT_EQ(parse_bundle("Wedge^2 Sd"), twist(S(), -1));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_bundle("Q*Sd + O(1)"), tensor(Q(), Sd()) + O(1));
  EXPECT_EQ(parse_bundle("Q*(Sd + O(1))"), tensor(Q(), Sd() + O(1)));
  EXPECT_EQ(parse_bundle("Sym^2 Q(-3)"), twist(Sym2Q(), -3));
  EXPECT_EQ(parse_bundle("Sym^2 (Q(-3))"), twist(Sym2Q(), -6));
  EXPECT_EQ(parse_bundle("(Q*Sd)(-1)"), twist(tensor(Q(), Sd()), -1));
  EXPECT_EQ(parse_bundle("Q(1)(2)"), twist(Q(), 3));
  EXPECT_EQ(parse_bundle("dual(Sym^2 Q)"), twist(Sym2Q(), -2));
}

TEST(Parser, IntegerMultiplicities) {
  EXPECT_EQ(parse_bundle("5*O(-1)"), trivial(5, -1));
  EXPECT_EQ(parse_bundle("10*O"), trivial(10));
  EXPECT_EQ(parse_bundle("2*Q + Q"), scale(Q(), 3));
}

TEST(Parser, WhitespaceInsensitive) {
  EXPECT_EQ(parse_bundle("  Sym ^ 2   Q ( -3 ) "), parse_bundle("Sym^2 Q(-3)"));
  EXPECT_EQ(parse_bundle("Wedge^2(Q+S+Sd)"), parse_bundle("Wedge^2 (Q + S + Sd)"));
}

TEST(Parser, SyntaxErrorsCarryPosition) {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse_bundle(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << text << " parsed";
    return 0;
  };
  EXPECT_EQ(position("Q +"), 3u);
  EXPECT_EQ(position("Q ) "), 2u);
  EXPECT_EQ(position("X"), 0u);
  EXPECT_EQ(position("O(1"), 3u);
  EXPECT_EQ(position("Sym^-1 Q"), 4u);
  EXPECT_THROW(parse_bundle(""), ParseError);
  EXPECT_THROW(parse_bundle("W(0,1;0,0,0)"), ParseError);
}

TEST(Parser, UnsupportedPlethysmIsReported) {
  EXPECT_THROW(parse_bundle("Sym^3 Sym^2 Q"), UnsupportedPlethysm);
}
