#include <catch2/catch_amalgamated.hpp>

#include <grpgeo/grpgeo.hpp>

using namespace grpgeo;

TEST_CASE("normalization produces reduced normal forms") {
  auto Z4 = builtin_cyclic(4);

  // x1 x1^-1 cancels
  auto w = Word::from_letters(Z4, {{1, 1, 0}, {1, -1, 0}});
  REQUIRE(w.is_identity());

  // adjacent constants merge, identity constants vanish
  auto c = Word::from_letters(Z4, {{0, 0, 1}, {0, 0, 1}});
  REQUIRE(c.letters().size() == 1);
  REQUIRE(c.letters()[0].elem == 2);

  // cascade: x1 'a' 'a^3' x1^-1 collapses completely
  auto cas = Word::from_letters(Z4, {{1, 1, 0}, {0, 0, 1}, {0, 0, 3}, {1, -1, 0}});
  REQUIRE(cas.is_identity());

  // same-variable neighbors merge exponents
  auto m = word_product(Z4, Word::variable(1, 2), Word::variable(1, 1));
  REQUIRE(m.letters().size() == 1);
  REQUIRE(m.letters()[0].exp == 3);

  // different variables stay apart
  auto d = word_product(Z4, Word::variable(1), Word::variable(2));
  REQUIRE(d.letters().size() == 2);
}

TEST_CASE("word algebra laws") {
  auto S3 = builtin_symmetric(3);
  auto u = word_product(S3, Word::variable(1), Word::constant(S3, 3));
  auto v = word_product(S3, Word::variable(2, -1), Word::variable(1, 2));

  REQUIRE(word_product(S3, u, word_inverse(S3, u)).is_identity());
  REQUIRE(word_inverse(S3, word_product(S3, u, v)) ==
          word_product(S3, word_inverse(S3, v), word_inverse(S3, u)));
  REQUIRE(word_power(S3, u, 3) == word_product(S3, word_product(S3, u, u), u));
  REQUIRE(word_power(S3, u, -1) == word_inverse(S3, u));
  REQUIRE(word_power(S3, u, 0).is_identity());
}

TEST_CASE("evaluation") {
  auto S3 = builtin_symmetric(3);
  // [x1, x2] evaluates to the commutator of the coordinates
  auto w = word_commutator(S3, Word::variable(1), Word::variable(2));
  for (elem_t a = 0; a < 6; ++a)
    for (elem_t b = 0; b < 6; ++b) REQUIRE(evaluate(S3, w, {a, b}) == S3->comm(a, b));

  // constants multiply in
  auto c = word_product(S3, Word::constant(S3, 2), Word::variable(1));
  for (elem_t a = 0; a < 6; ++a) REQUIRE(evaluate(S3, c, {a}) == S3->mul(2, a));

  REQUIRE_THROWS_AS(evaluate(S3, Word::variable(2), {elem_t(1)}), Error);
}

TEST_CASE("commutator chains left-align") {
  auto G = builtin_dihedral(8);
  auto x = Word::variable(1), y = Word::variable(2), z = Word::variable(3);
  auto chain = word_commutator_chain(G, {x, y, z});
  auto manual = word_commutator(G, word_commutator(G, x, y), z);
  REQUIRE(chain == manual);
}

TEST_CASE("group exponent") {
  REQUIRE(group_exponent(builtin_cyclic(12)) == 12);
  REQUIRE(group_exponent(builtin_symmetric(3)) == 6);
  REQUIRE(group_exponent(builtin_symmetric(4)) == 12);
  REQUIRE(group_exponent(builtin_elementary_abelian(2, 3)) == 2);
  REQUIRE(group_exponent(builtin_dicyclic(8)) == 4);
}

TEST_CASE("parser") {
  auto Z4 = ingest_group(std::string(GRPGEO_SAMPLES_DIR) + "/z4.gtab");
  auto S3 = builtin_symmetric(3);

  SECTION("variables and powers") {
    auto w = parse_word(S3, "x1 x2^-1");
    REQUIRE(w.letters().size() == 2);
    REQUIRE(w.letters()[0].var == 1);
    REQUIRE(w.letters()[1].var == 2);
    REQUIRE(w.letters()[1].exp == -1);
  }

  SECTION("constants by label") {
    auto w = parse_word(Z4, "'a' x1 'a^3'");
    REQUIRE(w.letters().size() == 3);
    REQUIRE(w.letters()[0].elem == 1);
    REQUIRE(w.letters()[2].elem == 3);
    // g<i> positional fallback works inside quotes
    auto v = parse_word(Z4, "'g2'");
    REQUIRE(v.letters()[0].elem == 2);
  }

  SECTION("identity literal") {
    REQUIRE(parse_word(S3, "1").is_identity());
    REQUIRE(parse_word(S3, "x1 1 x1^-1").is_identity());
  }

  SECTION("equations desugar to u v^-1") {
    auto w = parse_word(Z4, "x1 = 'a'");
    auto manual = word_product(Z4, Word::variable(1),
                               word_inverse(Z4, Word::constant(Z4, 1)));
    REQUIRE(w == manual);
  }

  SECTION("grouping and powers of groups") {
    auto w = parse_word(S3, "(x1 x2)^2");
    auto u = word_product(S3, Word::variable(1), Word::variable(2));
    REQUIRE(w == word_power(S3, u, 2));
  }

  SECTION("commutator brackets") {
    auto w = parse_word(S3, "[x1, x2]");
    REQUIRE(w == word_commutator(S3, Word::variable(1), Word::variable(2)));
    auto nested = parse_word(S3, "[x1, [x2, x1], x2]");
    auto inner = word_commutator(S3, Word::variable(2), Word::variable(1));
    auto manual = word_commutator(
        S3, word_commutator(S3, Word::variable(1), inner), Word::variable(2));
    REQUIRE(nested == manual);
  }

  SECTION("systems split on ';' and newlines") {
    auto sys = parse_system(S3, "x1^2; x2^3\nx1 = x2");
    REQUIRE(sys.size() == 3);
    auto one = parse_system(S3, "  x1^6  ");
    REQUIRE(one.size() == 1);
  }

  SECTION("errors carry positions and codes") {
    try {
      parse_word(S3, "x1^");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::parse_error);
      REQUIRE(std::string(e.what()).find("position") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_word(S3, "x0"), Error);
    REQUIRE_THROWS_AS(parse_word(S3, "[x1]"), Error);
    REQUIRE_THROWS_AS(parse_word(S3, "(x1"), Error);
    REQUIRE_THROWS_AS(parse_word(S3, "x1)"), Error);
    REQUIRE_THROWS_AS(parse_system(S3, ""), Error);
    REQUIRE_THROWS_AS(parse_system(S3, "   "), Error);

    try {
      parse_word(Z4, "'zz'");
      FAIL("expected UnknownLabel");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::unknown_label);
    }

    try {
      parse_word(S3, "x3", 2);
      FAIL("expected VariableOutOfRange");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::variable_out_of_range);
    }
  }

  SECTION("round trip through word_to_string") {
    for (const char* text : {"x1 x2^-1 'a' x1^3", "'a^2' x1 'a^3'", "x2^-4"}) {
      auto w = parse_word(Z4, text);
      auto again = parse_word(Z4, word_to_string(Z4, w));
      REQUIRE(w == again);
    }
    REQUIRE(word_to_string(Z4, Word::identity()) == "1");
  }
}

TEST_CASE("word enumeration") {
  auto Z2 = builtin_cyclic(2);

  // Alphabet over Z2 (exponent 2), one variable, coefficients on:
  // x1^{+-1}, x1^{+-2}, 'a'. Reduced words of length <= 2 are the empty
  // word, the five single letters, and the eight variable/constant
  // mixtures; same-variable and constant-constant pairs reduce.
  auto words = enumerate_words(Z2, 1, 2, true);
  REQUIRE(words.size() == 14);
  REQUIRE(words[0].is_identity());
  for (const auto& w : words) {
    auto renorm = Word::from_letters(Z2, w.letters());
    REQUIRE(renorm == w);  // already in normal form
  }
  // ranking: shorter words first
  for (std::size_t i = 1; i < words.size(); ++i)
    REQUIRE(words[i - 1].letters().size() <= words[i].letters().size());

  // coefficient-free enumeration uses variable letters only
  auto free_words = enumerate_words(Z2, 1, 2, false);
  REQUIRE(free_words.size() == 5);  // 1, x1, x1^-1, x1^2, x1^-2
  for (const auto& w : free_words)
    for (const auto& l : w.letters()) REQUIRE(l.is_var());

  // exponents span the full group exponent so every power of a variable
  // is reachable as a single reduced letter
  auto Z4 = builtin_cyclic(4);
  auto z4_words = enumerate_words(Z4, 1, 1, false);
  bool has_x_cubed = false, has_x_fourth = false;
  for (const auto& w : z4_words) {
    if (w.letters().size() == 1 && w.letters()[0].exp == 3) has_x_cubed = true;
    if (w.letters().size() == 1 && w.letters()[0].exp == 4) has_x_fourth = true;
  }
  REQUIRE(has_x_cubed);
  REQUIRE(has_x_fourth);

  Config tight;
  tight.word_stream_cap = 3;
  try {
    enumerate_words(Z2, 2, 3, true, tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::budget_exceeded);
    REQUIRE(e.exit_code() == 3);
  }
}
