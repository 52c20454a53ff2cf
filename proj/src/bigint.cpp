#include "opcyl/bigint.hpp"

#include <cstdlib>
#include <stdexcept>

namespace opcyl {

BigInt::BigInt(long long v)
{
    if (v == 0)
        return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (u) {
        mag_.push_back(uint32_t(u % kBase));
        u /= kBase;
    }
}

BigInt BigInt::parse(const std::string& s)
{
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-')
            sign = -1;
        ++i;
    }
    if (i == s.size())
        throw std::invalid_argument("BigInt::parse: empty digits in '" + s + "'");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt::parse: bad digit in '" + s + "'");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sign < 0)
        r = -r;
    return r;
}

void BigInt::trim()
{
    while (!mag_.empty() && mag_.back() == 0)
        mag_.pop_back();
    if (mag_.empty())
        sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size())
            s += a[i];
        if (i < b.size())
            s += b[i];
        r.push_back(uint32_t(s % kBase));
        carry = s / kBase;
    }
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
{
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t s = (int64_t)r[i] - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = uint32_t(s);
    }
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

BigInt BigInt::operator-() const
{
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const
{
    if (sign_ == 0)
        return o;
    if (o.sign_ == 0)
        return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
        return r;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0)
        return BigInt();
    if (c > 0) {
        r.sign_ = sign_;
        r.mag_ = sub_mag(mag_, o.mag_);
    } else {
        r.sign_ = o.sign_;
        r.mag_ = sub_mag(o.mag_, mag_);
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const
{
    return *this + (-o);
}

BigInt BigInt::operator*(const BigInt& o) const
{
    if (sign_ == 0 || o.sign_ == 0)
        return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size() || carry; ++j) {
            uint64_t cur = r.mag_[i + j] + carry;
            if (j < o.mag_.size())
                cur += (uint64_t)mag_[i] * o.mag_[j];
            r.mag_[i + j] = uint32_t(cur % kBase);
            carry = cur / kBase;
        }
    }
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const
{
    if (sign_ != o.sign_)
        return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

std::string BigInt::str() const
{
    if (is_zero())
        return "0";
    std::string s = sign_ < 0 ? "-" : "";
    char buf[16];
    snprintf(buf, sizeof buf, "%u", mag_.back());
    s += buf;
    for (size_t i = mag_.size() - 1; i-- > 0;) {
        snprintf(buf, sizeof buf, "%09u", mag_[i]);
        s += buf;
    }
    return s;
}

} // namespace opcyl
