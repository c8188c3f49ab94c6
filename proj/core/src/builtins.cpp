#include "braidlab/specfile.hpp"

#include "braidlab/errors.hpp"

namespace braidlab {

namespace {

YDSpace s3_rack(bool sign_twist) {
    FinGroupPtr s3 = symmetric_group(3);
    auto idx = [&](const Perm& p) { return *s3->index_of(MonomialMatrix::from_perm(p)); };
    // x = (1 2), y = (2 3), z = (1 3), the transposition class of S_3
    Perm x({1, 0, 2}), y({0, 2, 1}), z({2, 1, 0});
    std::vector<size_t> cls{idx(x), idx(y), idx(z)};
    std::vector<int> signs;
    if (sign_twist) signs = {-1, -1};  // the sign character on both transposition generators
    return YDSpace::rack_space(s3, cls, signs, {"x", "y", "z"});
}

}  // namespace

YDSpace builtin_space(const std::string& name) {
    if (name == "s3-rack") return s3_rack(false);
    if (name == "s3-rack-sign" || name == "fk3") return s3_rack(true);
    if (name == "symmetric-swap")
        return YDSpace::diagonal_space(
            {{FieldScalar(1), FieldScalar(1)}, {FieldScalar(1), FieldScalar(1)}});
    if (name.rfind("zeta", 0) == 0) {
        unsigned m = 0;
        try {
            m = (unsigned)std::stoul(name.substr(4));
        } catch (...) {
            throw InputError("unknown builtin space: " + name);
        }
        if (m < 2) throw InputError("zeta<N> builtin needs N >= 2");
        return YDSpace::diagonal_space({{FieldScalar::zeta(m)}});
    }
    throw InputError("unknown builtin space: " + name +
                     " (available: s3-rack, s3-rack-sign, zeta<N>, symmetric-swap)");
}

std::vector<std::string> builtin_names() {
    return {"s3-rack", "s3-rack-sign", "zeta2", "zeta3", "zeta4", "zeta5", "zeta6",
            "symmetric-swap"};
}

}  // namespace braidlab
