#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdil/rational.hpp"

namespace pdil {

/// Finite binary word over the characters '0' and '1'.
using Word = std::string;

/// Throws ParseError unless every character is '0' or '1'.
void check_binary(std::string_view w, std::size_t offset = 0);
bool is_primitive(std::string_view w);
/// Shortest u with w = u^k.
Word primitive_root(std::string_view w);
/// w[j..] + w[..j].
Word rotate_left(std::string_view w, std::size_t j);

/// Eventually periodic binary word `preperiod (period)^∞`, kept canonical:
/// primitive period and shortest preperiod.
class EPWord {
public:
    EPWord() : period_("0") {}
    EPWord(Word preperiod, Word period);

    static EPWord constant(int digit) { return EPWord("", digit ? "1" : "0"); }
    /// Text form `pre(period)`, e.g. `01(100)` or `(0)`.
    static EPWord parse(std::string_view text);
    std::string str() const;

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return period_; }

    /// Digit at 0-based position i.
    int digit(std::size_t i) const;
    /// First n digits.
    Word prefix(std::size_t n) const;
    /// d followed by this word.
    EPWord prepend(int d) const;
    /// This word with its first digit removed.
    EPWord tail() const;

    bool has_constant_tail() const { return period_.size() == 1; }

    friend bool operator==(const EPWord&, const EPWord&) = default;
    friend auto operator<=>(const EPWord&, const EPWord&) = default;

private:
    Word pre_;
    Word period_;
};

/// τ_d(x) = (x + d) / 2.
Rational tau(int d, const Rational& x);

/// Finite orbit θ_0 -> θ_1 -> ... -> θ_0 with θ_{j+1} = τ_{l_j}(θ_j).
class Cycle {
public:
    /// Throws unless `word` is a nonempty primitive binary word.
    explicit Cycle(Word word);

    const Word& word() const { return word_; }
    const std::vector<Rational>& points() const { return points_; }
    std::size_t length() const { return word_.size(); }
    const Rational& theta(std::size_t j) const { return points_[j % points_.size()]; }

    /// The digit sequence l_j l_{j+1} ... l_{j-1}.
    Word rotation(std::size_t j) const { return rotate_left(word_, j); }
    /// j such that `period` equals rotation(j), if any.
    std::optional<std::size_t> rotation_index(std::string_view period) const;
    /// True iff `other` describes the same orbit (its word is a rotation of ours).
    bool same_orbit(const Cycle& other) const;

    /// Rotation whose θ_0 is smallest.
    Cycle canonical() const;

private:
    Word word_;
    std::vector<Rational> points_;
};

} // namespace pdil
