#include "lapinit/jumps.hpp"

#include <stdexcept>

namespace lapinit {

JumpReport compute_jumps(const SingularSolution& ss, const SysSpec& sys) {
    if (static_cast<int>(ss.derivative_parts.size()) != sys.n + 1)
        throw std::invalid_argument("singular solution does not match the system order");

    JumpReport report;
    report.rows.reserve(sys.n);
    for (int k = 0; k < sys.n; ++k) {
        JumpReport::Row row;
        row.order = k;
        row.pre = sys.y_pre[k];
        row.jump = sing_integral_total(ss.derivative_parts[k + 1]);
        row.post = row.pre + row.jump;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<Rational> post_initial_conditions(const JumpReport& report) {
    std::vector<Rational> post;
    post.reserve(report.rows.size());
    for (const auto& row : report.rows) post.push_back(row.post);
    return post;
}

}  // namespace lapinit
