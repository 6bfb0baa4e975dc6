#ifndef LINKHOM_SERIES_HPP
#define LINKHOM_SERIES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkhom/decomposition.hpp"
#include "linkhom/word.hpp"

namespace linkhom {

using Int = boost::multiprecision::cpp_int;

/// A word X_{c_1}...X_{c_d} in the noncommuting strand variables, packed
/// into 16 bytes: data[0] holds the degree, data[1..d] hold strand+1.
/// The default array ordering is degree-then-lexicographic.
struct Monomial {
    static constexpr int kMaxDegree = 15;

    std::array<std::uint8_t, 16> data{};

    int degree() const { return data[0]; }
    int entry(int i) const { return static_cast<int>(data[1 + i]) - 1; }

    Monomial append(int strand) const
    {
        if (degree() >= kMaxDegree)
            throw std::length_error("monomial too long");
        Monomial m = *this;
        m.data[0] = static_cast<std::uint8_t>(degree() + 1);
        m.data[degree() + 1] = static_cast<std::uint8_t>(strand + 1);
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b)
    {
        return a.data <=> b.data;
    }
};

/// An element of the integer algebra on the X variables, truncated by the
/// rule that a monomial containing two variables of the same color is
/// zero.  This is the effective normal form for elements of the reduced
/// colored free group: two words are equal there exactly when their
/// expansions here agree.
class TruncatedSeries {
public:
    TruncatedSeries() = default;

    explicit TruncatedSeries(ComponentDecomposition l) : ambient_(std::move(l))
    {
        if (ambient_.num_colors() > Monomial::kMaxDegree)
            throw std::invalid_argument("too many colors for series arithmetic");
    }

    static TruncatedSeries one(const ComponentDecomposition& l)
    {
        TruncatedSeries s(l);
        s.terms_[Monomial{}] = 1;
        return s;
    }

    static TruncatedSeries variable(const ComponentDecomposition& l, int strand)
    {
        TruncatedSeries s(l);
        s.terms_[Monomial{}.append(strand)] = 1;
        return s;
    }

    const ComponentDecomposition& ambient() const { return ambient_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int constant_term() const { return coefficient(Monomial{}); }

    Int coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int coefficient(const std::vector<int>& strands) const
    {
        Monomial m;
        for (int s : strands)
            m = m.append(s);
        return coefficient(m);
    }

    Int coefficient(std::initializer_list<int> strands) const
    {
        return coefficient(std::vector<int>(strands));
    }

    void set(const Monomial& m, Int v)
    {
        if (v == 0)
            terms_.erase(m);
        else
            terms_[m] = std::move(v);
    }

    void add(const Monomial& m, const Int& v)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (v != 0)
                terms_.emplace(m, v);
        } else {
            it->second += v;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs)
    {
        require_same_ambient(rhs);
        for (const auto& [m, v] : rhs.terms_)
            add(m, v);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs)
    {
        require_same_ambient(rhs);
        for (const auto& [m, v] : rhs.terms_)
            add(m, -v);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b)
    {
        a += b;
        return a;
    }

    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b)
    {
        a -= b;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b)
    {
        a.require_same_ambient(b);
        TruncatedSeries out(a.ambient_);
        const int max_deg = a.ambient_.num_colors();
        for (const auto& [ma, ca] : a.terms_) {
            std::uint32_t mask_a = a.color_mask(ma);
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.degree() + mb.degree() > max_deg)
                    continue;
                if (mask_a & b.color_mask(mb))
                    continue; // repeated color: the product monomial is zero
                Monomial m = ma;
                for (int i = 0; i < mb.degree(); ++i)
                    m = m.append(mb.entry(i));
                out.add(m, ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& rhs)
    {
        *this = *this * rhs;
        return *this;
    }

    /// Fast multiplication by (1 + sign * X_strand) on the right.
    void mul_one_plus_var(int strand, int sign)
    {
        const int color_bit = 1 << (ambient_.color_of(strand) - 1);
        std::map<Monomial, Int> next = terms_;
        for (const auto& [m, c] : terms_) {
            if (color_mask(m) & color_bit)
                continue;
            Monomial ext = m.append(strand);
            auto it = next.find(ext);
            Int delta = sign > 0 ? c : -c;
            if (it == next.end()) {
                if (delta != 0)
                    next.emplace(ext, std::move(delta));
            } else {
                it->second += delta;
                if (it->second == 0)
                    next.erase(it);
            }
        }
        terms_ = std::move(next);
    }

    /// Two-sided inverse; the augmentation ideal is nilpotent, so the
    /// geometric series terminates.  Requires constant term 1.
    TruncatedSeries inverse() const
    {
        if (constant_term() != 1)
            throw std::domain_error("series inverse needs constant term 1");
        TruncatedSeries n = *this;
        n.add(Monomial{}, -1); // n = s - 1
        TruncatedSeries out = one(ambient_);
        TruncatedSeries power = one(ambient_);
        for (int r = 1; r <= ambient_.num_colors(); ++r) {
            power = power * n;
            if (power.is_zero())
                break;
            if (r % 2 == 1)
                out -= power;
            else
                out += power;
        }
        return out;
    }

    /// Zero out every monomial that mentions a strand of the given color.
    TruncatedSeries project_color(int color) const
    {
        TruncatedSeries out(ambient_);
        const std::uint32_t bit = 1u << (color - 1);
        for (const auto& [m, c] : terms_)
            if (!(color_mask(m) & bit))
                out.terms_.emplace(m, c);
        return out;
    }

    int min_degree() const
    {
        // Terms are ordered by degree first.
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    /// The homogeneous part of the given degree.
    TruncatedSeries degree_part(int d) const
    {
        TruncatedSeries out(ambient_);
        for (const auto& [m, c] : terms_) {
            if (m.degree() > d)
                break;
            if (m.degree() == d)
                out.terms_.emplace(m, c);
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }

private:
    void require_same_ambient(const TruncatedSeries& rhs) const
    {
        if (!(ambient_ == rhs.ambient_))
            throw std::invalid_argument("series ambient decompositions differ");
    }

    std::uint32_t color_mask(const Monomial& m) const
    {
        std::uint32_t mask = 0;
        for (int i = 0; i < m.degree(); ++i)
            mask |= 1u << (ambient_.color_of(m.entry(i)) - 1);
        return mask;
    }

    ComponentDecomposition ambient_;
    std::map<Monomial, Int> terms_;
};

/// Multiplicative extension of x_e -> 1 + X_e.  An inverse letter expands
/// to 1 - X_e exactly, because X_e X_e already dies in the truncation.
inline TruncatedSeries magnus_expand(const FreeWord& w,
                                     const ComponentDecomposition& l)
{
    TruncatedSeries s = TruncatedSeries::one(l);
    for (const auto& a : w.letters()) {
        if (a.strand < 0 || a.strand >= l.total())
            throw std::invalid_argument("word letter out of range");
        s.mul_one_plus_var(a.strand, a.sign);
    }
    return s;
}

/// Equality in the reduced colored free group, decided through the
/// truncated expansion.
inline bool rcf_equal(const FreeWord& u, const FreeWord& v,
                      const ComponentDecomposition& l)
{
    return magnus_expand(u, l) == magnus_expand(v, l);
}

/// The ordered product of all meridians; string-link automorphisms fix it.
inline FreeWord boundary_word(const ComponentDecomposition& l)
{
    FreeWord w;
    for (int s = 0; s < l.total(); ++s)
        w.push(s, 1);
    return w;
}

} // namespace linkhom

#endif
