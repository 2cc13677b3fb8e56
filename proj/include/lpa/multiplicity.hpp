#ifndef LPA_MULTIPLICITY_HPP
#define LPA_MULTIPLICITY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpa {

/// Number of parallel edges in one edge class: a positive integer or ω.
/// ω-multiplicity classes are how a finite presentation models vertices
/// emitting infinitely many edges.
class Multiplicity {
public:
    static Multiplicity finite(std::uint64_t n) {
        if (n == 0)
            throw std::invalid_argument("Multiplicity: edge class with multiplicity 0");
        Multiplicity m;
        m.value_ = n;
        return m;
    }
    static Multiplicity omega() {
        Multiplicity m;
        m.omega_ = true;
        return m;
    }

    bool is_omega() const { return omega_; }
    std::uint64_t value() const {
        if (omega_)
            throw std::logic_error("Multiplicity: ω has no finite value");
        return value_;
    }

    bool operator==(const Multiplicity& o) const {
        return omega_ == o.omega_ && value_ == o.value_;
    }
    bool operator!=(const Multiplicity& o) const { return !(*this == o); }

    std::string to_string() const { return omega_ ? "w" : std::to_string(value_); }

private:
    std::uint64_t value_ = 1;
    bool omega_ = false;
};

/// Edge count that may be infinite; used for summing multiplicities.
struct EdgeCount {
    std::uint64_t finite = 0;
    bool infinite = false;

    void add(const Multiplicity& m) {
        if (m.is_omega())
            infinite = true;
        else
            finite += m.value();
    }
    bool is_zero() const { return !infinite && finite == 0; }
};

} // namespace lpa

#endif // LPA_MULTIPLICITY_HPP
