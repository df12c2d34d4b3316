#include "pdil/words.hpp"

#include <algorithm>

#include "pdil/errors.hpp"

namespace pdil {

void check_binary(std::string_view w, std::size_t offset)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != '0' && w[i] != '1')
            throw ParseError(offset + i, "expected binary digit");
}

Word primitive_root(std::string_view w)
{
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = w[i] == w[i - d];
        if (ok)
            return Word(w.substr(0, d));
    }
    return Word(w);
}

bool is_primitive(std::string_view w)
{
    return !w.empty() && primitive_root(w).size() == w.size();
}

Word rotate_left(std::string_view w, std::size_t j)
{
    if (w.empty())
        return {};
    j %= w.size();
    return Word(w.substr(j)) + Word(w.substr(0, j));
}

EPWord::EPWord(Word preperiod, Word period) : pre_(std::move(preperiod))
{
    check_binary(pre_);
    check_binary(period);
    if (period.empty())
        throw Error(ErrorKind::Precondition, "eventually periodic word needs a nonempty period");
    period_ = primitive_root(period);
    while (!pre_.empty() && pre_.back() == period_.back()) {
        pre_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

EPWord EPWord::parse(std::string_view text)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos)
        throw ParseError(text.size(), "expected '(' starting the period");
    if (text.empty() || text.back() != ')')
        throw ParseError(text.size(), "expected ')' closing the period");
    const auto pre = text.substr(0, open);
    const auto per = text.substr(open + 1, text.size() - open - 2);
    check_binary(pre, 0);
    check_binary(per, open + 1);
    if (per.empty())
        throw ParseError(open + 1, "empty period");
    return EPWord(Word(pre), Word(per));
}

std::string EPWord::str() const
{
    return pre_ + "(" + period_ + ")";
}

int EPWord::digit(std::size_t i) const
{
    if (i < pre_.size())
        return pre_[i] - '0';
    return period_[(i - pre_.size()) % period_.size()] - '0';
}

Word EPWord::prefix(std::size_t n) const
{
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out += static_cast<char>('0' + digit(i));
    return out;
}

EPWord EPWord::prepend(int d) const
{
    return EPWord(Word(1, static_cast<char>('0' + d)) + pre_, period_);
}

EPWord EPWord::tail() const
{
    if (!pre_.empty())
        return EPWord(pre_.substr(1), period_);
    return EPWord("", rotate_left(period_, 1));
}

Rational tau(int d, const Rational& x)
{
    return (x + d) / 2;
}

Cycle::Cycle(Word word) : word_(std::move(word))
{
    check_binary(word_);
    if (!is_primitive(word_))
        throw Error(ErrorKind::Precondition, "cycle word '" + word_ + "' is empty or not primitive");
    const std::size_t p = word_.size();
    Integer num = 0;
    for (std::size_t i = 0; i < p; ++i)
        if (word_[i] == '1')
            num += Integer(1) << static_cast<mp_bitcnt_t>(i);
    const Integer den = (Integer(1) << static_cast<mp_bitcnt_t>(p)) - 1;
    points_.reserve(p);
    points_.emplace_back(num, den);
    for (std::size_t j = 0; j + 1 < p; ++j)
        points_.push_back(tau(word_[j] - '0', points_.back()));
}

std::optional<std::size_t> Cycle::rotation_index(std::string_view period) const
{
    if (period.size() != word_.size())
        return std::nullopt;
    for (std::size_t j = 0; j < word_.size(); ++j)
        if (rotation(j) == period)
            return j;
    return std::nullopt;
}

bool Cycle::same_orbit(const Cycle& other) const
{
    return rotation_index(other.word_).has_value();
}

Cycle Cycle::canonical() const
{
    const auto it = std::min_element(points_.begin(), points_.end());
    return Cycle(rotation(static_cast<std::size_t>(it - points_.begin())));
}

} // namespace pdil
