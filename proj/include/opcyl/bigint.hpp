#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opcyl {

// Signed arbitrary-precision integer, base 1e9 limbs, little-endian.
// Only the operations the term algebra needs: ring ops, comparison,
// decimal round trip. No division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt parse(const std::string& s);

    bool is_zero() const { return mag_.empty(); }
    bool is_one() const { return sign_ > 0 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    std::string str() const;

private:
    static constexpr uint32_t kBase = 1000000000u;

    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // empty iff zero

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();
};

} // namespace opcyl
