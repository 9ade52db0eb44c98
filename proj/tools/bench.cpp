#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "pcolor/decomposition.hpp"
#include "pcolor/families.hpp"

namespace {

using namespace pcolor;
using clock_type = std::chrono::steady_clock;

double run_ms(const std::function<void()>& work) {
  const auto start = clock_type::now();
  work();
  const auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-12s %12.2f %12.2f %9.2fx   results %s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel timings on a torus family instance"};
  std::uint64_t m = 7;
  std::int64_t c = 1;
  app.add_option("--modulus", m, "odd prime modulus of the torus family")
      ->check(CLI::PositiveNumber);
  app.add_option("--coefficient", c, "bracket coefficient");
  CLI11_PARSE(app, argc, argv);

  const ColorAlgebra algebra = det_torus(m, c, {0, 0});
  std::printf("instance: torus m=%llu, dim %d over %s, %d OpenMP thread(s)\n",
              static_cast<unsigned long long>(m), algebra.dim(),
              algebra.field().to_string().c_str(), omp_get_max_threads());
  std::printf("%-12s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

  {
    AxiomReport rs, rp;
    const double ts = run_ms([&] { rs = check_axioms(algebra, Execution::serial); });
    const double tp = run_ms([&] { rp = check_axioms(algebra, Execution::parallel); });
    row("axioms", ts, tp, rs == rp);
  }
  {
    const RestrictedSupport support = RestrictedSupport::of(algebra);
    SupportPartition ps, pp;
    const double ts = run_ms([&] { ps = equivalence_classes(support, Execution::serial); });
    const double tp = run_ms([&] { pp = equivalence_classes(support, Execution::parallel); });
    row("partition", ts, tp, ps.classes == pp.classes && ps.witnesses == pp.witnesses);
  }
  {
    SimplicityResult ss, sp;
    const double ts = run_ms([&] { ss = is_simple_oracle(algebra, Execution::serial); });
    const double tp = run_ms([&] { sp = is_simple_oracle(algebra, Execution::parallel); });
    row("oracle", ts, tp, ss.simple == sp.simple && ss.witness == sp.witness);
  }
  return 0;
}
