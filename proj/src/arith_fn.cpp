#include "darcais/arith_fn.hpp"

#include "darcais/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace darcais {

ArithFn::ArithFn(Kind k, unsigned d, std::vector<Int> v)
    : kind_(k), power_d_(d), values_(std::move(v)) {
    if (kind_ == Kind::Table && (values_.empty() || values_[0] != 1))
        throw not_normalized();
}

ArithFn ArithFn::sigma() { return ArithFn(Kind::Sigma, 0, {}); }

ArithFn ArithFn::power(unsigned d) { return ArithFn(Kind::Power, d, {}); }

ArithFn ArithFn::table(std::vector<Int> values) {
    return ArithFn(Kind::Table, 0, std::move(values));
}

Int ArithFn::operator()(long n) const {
    switch (kind_) {
    case Kind::Sigma: {
        Int s = 0;
        for (long d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            s += d;
            if (d != n / d) s += n / d;
        }
        return s;
    }
    case Kind::Power: {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), power_d_);
        return r;
    }
    case Kind::Table:
        if (n < 1 || n > static_cast<long>(values_.size()))
            throw table_out_of_range(n);
        return values_[n - 1];
    }
    throw error("unreachable");
}

int ArithFn::g3_mod3() const {
    Int r = (*this)(3) % 3;
    if (r < 0) r += 3;
    return static_cast<int>(r.get_si());
}

std::string ArithFn::name() const {
    switch (kind_) {
    case Kind::Sigma: return "sigma";
    case Kind::Power: return "power:" + std::to_string(power_d_);
    case Kind::Table: {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < values_.size(); ++i)
            os << (i ? "," : "") << values_[i].get_str();
        os << "]";
        return os.str();
    }
    }
    return {};
}

ArithFn ArithFn::parse(const std::string& spec) {
    if (spec == "sigma") return sigma();
    if (spec.rfind("power:", 0) == 0)
        return power(static_cast<unsigned>(std::stoul(spec.substr(6))));

    std::string body = spec;
    if (spec.rfind("table:@", 0) == 0) {
        std::ifstream in(spec.substr(7));
        if (!in) throw error("cannot open table file " + spec.substr(7));
        std::ostringstream buf;
        buf << in.rdbuf();
        body = buf.str();
    } else if (spec.rfind("table:", 0) == 0) {
        body = spec.substr(6);
    }

    auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw error("unrecognized arithmetic function spec: " + spec);
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number_integer())
            v.emplace_back(static_cast<long>(e.get<long long>()));
        else if (e.is_string())
            v.emplace_back(e.get<std::string>());
        else
            throw error("table entries must be integers");
    }
    return table(std::move(v));
}

} // namespace darcais
