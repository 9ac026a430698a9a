#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kproc {

// The slowly growing function omega used in the milestone formulas.
struct OmegaSpec {
    enum class Kind { LogLog, Log, Const };
    Kind kind = Kind::LogLog;
    double c = 1.0;  // Const only

    double value(double n) const {
        switch (kind) {
            case Kind::LogLog: return std::log(std::log(n));
            case Kind::Log: return std::log(n);
            case Kind::Const: return c;
        }
        return 1.0;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::LogLog: return "loglog";
            case Kind::Log: return "log";
            case Kind::Const: return "const:" + std::to_string(c);
        }
        return "";
    }

    static OmegaSpec parse(const std::string& s) {
        if (s == "loglog") return {Kind::LogLog, 1.0};
        if (s == "log") return {Kind::Log, 1.0};
        if (s.rfind("const:", 0) == 0) return {Kind::Const, std::stod(s.substr(6))};
        throw std::invalid_argument("omega must be one of loglog, log, const:<c>");
    }
};

// Critical-window step indices around m = n/2. Natural log throughout.
// lambda3's log factor is clamped below at 1 so m3 stays meaningful near
// the k ~ n^{1/3} threshold.
struct Milestones {
    double omega = 0;
    double lambda1 = 0;
    double lambda2 = 0;
    double lambda3 = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m3 = 0;
    bool lambda3_clamped = false;

    static Milestones compute(std::uint64_t n, std::uint64_t k, OmegaSpec omega_spec = {}) {
        if (n < 3 || k < 1) throw std::invalid_argument("milestones need n >= 3, k >= 1");
        Milestones ms;
        double nd = static_cast<double>(n);
        double kd = static_cast<double>(k);
        double n13 = std::cbrt(nd);
        ms.omega = omega_spec.value(nd);
        ms.lambda1 = n13 / (kd * ms.omega);
        ms.lambda2 = n13 * ms.omega / kd;
        double log_ratio = std::log(kd / n13);
        if (log_ratio < 1.0) {
            log_ratio = 1.0;
            ms.lambda3_clamped = true;
        }
        ms.lambda3 = std::sqrt(kd / n13 * log_ratio);
        ms.m1 = static_cast<std::uint64_t>(std::floor(nd / 2.0 * (1.0 + ms.lambda1 / n13)));
        double m3d = std::floor(nd / 2.0 * (1.0 - ms.lambda3 / n13));
        ms.m3 = m3d > 0 ? static_cast<std::uint64_t>(m3d) : 0;
        return ms;
    }
};

}  // namespace kproc
