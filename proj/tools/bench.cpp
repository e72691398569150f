// Times the OpenMP kernels against their serial reference implementations:
// B-spline assembly, Appell extraction, biorthogonality Gram matrices, the
// Laguerre Gram, and the series Cauchy product.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bior/appell.hpp"
#include "bior/bspline.hpp"
#include "bior/parallel.hpp"
#include "bior/series.hpp"
#include "bior/verify.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class Fn>
double time_ms(Fn&& fn) {
  const auto t0 = clock_type::now();
  fn();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bior::Series<bior::Rat> random_series(std::size_t order, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  bior::Series<bior::Rat> s(order);
  for (std::size_t j = 0; j <= order; ++j) s.coeff(j) = bior::rat(num(rng), den(rng));
  return s;
}

struct Row {
  std::string name;
  double serial_ms;
  double parallel_ms;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial[ms]", "parallel[ms]", "speedup");
  for (const auto& r : rows)
    std::printf("%-28s %12.1f %12.1f %8.2fx\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
                r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1e-9));
}

}  // namespace

int main(int argc, char** argv) {
  const bool smoke = argc > 1 && std::string(argv[1]) == "--smoke";
  const long spline_order = smoke ? 12 : 96;
  const long appell_order = smoke ? 8 : 48;
  const std::size_t appell_m = smoke ? 12 : 40;
  const std::size_t gram_extent = smoke ? 4 : 10;
  const std::size_t mul_order = smoke ? 32 : 384;

  std::printf("threads available: %d\n", bior::par::max_threads());
  std::vector<Row> rows;
  std::mt19937 rng(12345);

  {
    bior::PiecewisePoly a, b;
    const double ser = time_ms([&] { a = bior::bspline_serial(spline_order); });
    const double par = time_ms([&] { b = bior::bspline(spline_order); });
    if (!(a.pieces == b.pieces)) {
      std::fprintf(stderr, "bspline: serial and parallel results differ\n");
      return 1;
    }
    rows.push_back({"bspline N=" + std::to_string(spline_order), ser, par});
  }

  {
    const auto dist = bior::bspline_distribution(appell_order, appell_m);
    bior::AppellSequence s1, s2;
    const double ser =
        time_ms([&] { s1 = bior::appell_from_distribution_serial(dist, appell_m); });
    const double par = time_ms([&] { s2 = bior::appell_from_distribution(dist, appell_m); });
    if (!(s1.polys == s2.polys)) {
      std::fprintf(stderr, "appell: serial and parallel results differ\n");
      return 1;
    }
    rows.push_back({"appell N=" + std::to_string(appell_order) +
                        " m<=" + std::to_string(appell_m),
                    ser, par});

    std::vector<std::vector<bior::Rat>> g1, g2;
    const double gser = time_ms(
        [&] { g1 = bior::biorthogonality_gram_serial(dist, s1, gram_extent, gram_extent); });
    const double gpar =
        time_ms([&] { g2 = bior::biorthogonality_gram(dist, s2, gram_extent, gram_extent); });
    if (g1 != g2) {
      std::fprintf(stderr, "gram: serial and parallel results differ\n");
      return 1;
    }
    rows.push_back({"biorthogonality gram " + std::to_string(gram_extent + 1) + "^2", gser,
                    gpar});
  }

  {
    std::vector<std::vector<bior::Rat>> g1, g2;
    const double ser =
        time_ms([&] { g1 = bior::laguerre_orthogonality_serial(2, gram_extent); });
    const double par = time_ms([&] { g2 = bior::laguerre_orthogonality(2, gram_extent); });
    if (g1 != g2) {
      std::fprintf(stderr, "laguerre gram: serial and parallel results differ\n");
      return 1;
    }
    rows.push_back({"laguerre gram " + std::to_string(gram_extent + 1) + "^2", ser, par});
  }

  {
    const auto s = random_series(mul_order, rng);
    const auto t = random_series(mul_order, rng);
    bior::Series<bior::Rat> p1(mul_order), p2(mul_order);
    const double ser = time_ms([&] { p1 = bior::series_mul_serial(s, t); });
    const double par = time_ms([&] { p2 = bior::series_mul(s, t); });
    if (!(p1 == p2)) {
      std::fprintf(stderr, "series_mul: serial and parallel results differ\n");
      return 1;
    }
    rows.push_back({"series_mul order=" + std::to_string(mul_order), ser, par});
  }

  print_rows(rows);
  return 0;
}
