#include "goldman/ball.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goldman {

namespace {

// u*a + v*b == gcd(a,b)
void egcd(long long a, long long b, long long& g, long long& u, long long& v) {
  if (b == 0) {
    g = a;
    u = 1;
    v = 0;
    return;
  }
  long long g1, u1, v1;
  egcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

}  // namespace

bool Ball::contains(const ProjectiveMatrix& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

Ball enumerate_ball(double radius, const SubgroupSpec& spec) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  double bound = 2.0 * std::cosh(radius);
  if (bound > 4e15) throw std::invalid_argument("ball bound exceeds exact enumeration range");
  long long nb = static_cast<long long>(std::ceil(bound));

  Ball ball;
  ball.radius = radius;
  ball.spec = spec;

  auto emit = [&](long long a, long long b, long long c, long long d) {
    ProjectiveMatrix m{Int(static_cast<long>(a)), Int(static_cast<long>(b)),
                       Int(static_cast<long>(c)), Int(static_cast<long>(d))};
    if (is_member(spec, m)) ball.elements.push_back(std::move(m));
  };

  // One lift per projective element: c > 0, or c == 0 with d = 1.
  // (c, d) = (0, 1): a = 1, b free.
  for (long long b = 0; 2 + b * b <= nb; ++b) {
    emit(1, b, 0, 1);
    if (b > 0) emit(1, -b, 0, 1);
  }
  for (long long c = 1; c * c + 1 <= nb; ++c) {
    long long dmax = static_cast<long long>(std::sqrt(static_cast<double>(nb - c * c))) + 1;
    for (long long d = -dmax; d <= dmax; ++d) {
      if (c * c + d * d + 1 > nb) continue;
      long long g, u, v;
      egcd(d, c, g, u, v);
      if (g < 0) {
        g = -g;
        u = -u;
        v = -v;
      }
      if (g != 1) continue;
      // a0*d - b0*c = 1 with (a0, b0) = (u, -v); line (a0 + t c, b0 + t d).
      long long a0 = u, b0 = -v;
      auto norm = [&](long long t) {
        long long a = a0 + t * c, b = b0 + t * d;
        return a * a + b * b + c * c + d * d;
      };
      double tstar = -(static_cast<double>(a0) * c + static_cast<double>(b0) * d) /
                     (static_cast<double>(c) * c + static_cast<double>(d) * d);
      long long t0 = std::llround(tstar);
      long long seed = t0;
      bool found = false;
      for (long long cand : {t0, t0 - 1, t0 + 1}) {
        if (norm(cand) <= nb) {
          seed = cand;
          found = true;
          break;
        }
      }
      if (!found) continue;
      for (long long t = seed; norm(t) <= nb; ++t) emit(a0 + t * c, b0 + t * d, c, d);
      for (long long t = seed - 1; norm(t) <= nb; --t) emit(a0 + t * c, b0 + t * d, c, d);
    }
  }

  std::sort(ball.elements.begin(), ball.elements.end());
  ball.elements.erase(std::unique(ball.elements.begin(), ball.elements.end()), ball.elements.end());
  return ball;
}

}  // namespace goldman
