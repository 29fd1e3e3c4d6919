// Compares the serial reference against the OpenMP path on the two
// data-parallel kernels (pattern enumeration, audit classification) and
// checks that both produce byte-identical output. On a single-core box the
// timings will be ~1x; the equality check is the part that must never drift.

#include <chrono>
#include <iostream>

#include "sspc/audit.hpp"

using h_clock = std::chrono::steady_clock;

static double ms_since(h_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(h_clock::now() - t0).count();
}

int main() {
    using namespace sspc;

    {
        auto t0 = h_clock::now();
        auto serial = enumerate_patterns(4, true, Exec::serial);
        double ts = ms_since(t0);
        t0 = h_clock::now();
        auto parallel = enumerate_patterns(4, true, Exec::parallel);
        double tp = ms_since(t0);
        std::cout << "enumerate order 4: serial " << ts << " ms, parallel " << tp << " ms, "
                  << (serial == parallel ? "identical" : "MISMATCH") << " (" << serial.size()
                  << " patterns)\n";
        if (serial != parallel) return 1;
    }

    {
        AuditConfig cfg;
        cfg.min_order = 1;
        cfg.max_order = 3;
        cfg.samples = 20;
        cfg.completion.budget = 4000;

        cfg.exec = Exec::serial;
        auto t0 = h_clock::now();
        std::string serial = render_report(audit_catalog_claims(cfg), "json");
        double ts = ms_since(t0);

        cfg.exec = Exec::parallel;
        t0 = h_clock::now();
        std::string parallel = render_report(audit_catalog_claims(cfg), "json");
        double tp = ms_since(t0);

        // the exec flag is recorded inside the report; blank it before comparing
        auto scrub = [](std::string s) {
            auto pos = s.find("\"exec\"");
            if (pos != std::string::npos) {
                auto end = s.find('\n', pos);
                s.erase(pos, end - pos);
            }
            return s;
        };
        bool same = scrub(serial) == scrub(parallel);
        std::cout << "audit orders 1..3: serial " << ts << " ms, parallel " << tp << " ms, "
                  << (same ? "identical" : "MISMATCH") << "\n";
        if (!same) return 1;
    }

    return 0;
}
