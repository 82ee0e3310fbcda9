#include "metakzb/numeric.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace metakzb {

const Real& pi_real() {
    static const Real pi = boost::math::constants::pi<Real>();
    return pi;
}

Complex two_pi_i() { return Complex(Real(0), 2 * pi_real()); }

Real zeta_real(int n) {
    if (n < 2) throw std::invalid_argument("zeta_real: argument must be >= 2");
    static std::mutex m;
    static std::map<int, Real> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, boost::math::zeta(Real(n))).first;
    return it->second;
}

Complex cpow(const Complex& z, long e) {
    if (e == 0) return Complex(1);
    bool neg = e < 0;
    unsigned long ue = neg ? (unsigned long)(-e) : (unsigned long)e;
    if (neg && z == Complex(0)) throw std::domain_error("cpow: zero to a negative power");
    Complex base = z, acc(1);
    while (ue) {
        if (ue & 1) acc *= base;
        base *= base;
        ue >>= 1;
    }
    return neg ? Complex(1) / acc : acc;
}

Real rat_to_real(const Rational& q) {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Real int_to_real(const Int& n) { return Real(n.get_str()); }

}  // namespace metakzb
