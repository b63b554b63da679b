#include "dpp/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dpp/errors.hpp"
#include "dpp/special_functions.hpp"

namespace dpp {

double sinc(double z) {
  const double t = M_PI * z;
  if (std::abs(t) < 1e-5) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  }
  return std::sin(t) / t;
}

Kernel sine_kernel() {
  return Kernel("sine", KernelSymmetry::real_symmetric,
                [](double x, double y) { return sinc(x - y); });
}

Kernel sine_pm_kernel(int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sine_pm_kernel: sign must be +1 or -1");
  const double s = sign;
  return Kernel(sign > 0 ? "sine-plus" : "sine-minus",
                KernelSymmetry::real_symmetric, [s](double x, double y) {
                  return 0.5 * (sinc(x - y) + s * sinc(x + y));
                });
}

Kernel airy_kernel() {
  return Kernel("airy", KernelSymmetry::real_symmetric, [](double x, double y) {
    const double d = x - y;
    if (std::abs(d) < 1e-4) {
      const double m = 0.5 * (x + y);
      const AiryPair a = airy(m);
      return a.aip * a.aip - m * a.ai * a.ai;
    }
    const AiryPair ax = airy(x), ay = airy(y);
    return (ax.ai * ay.aip - ay.ai * ax.aip) / d;
  });
}

namespace {

std::string format_point(double p) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

}  // namespace

Kernel deflate(const Kernel& base, double p) {
  const double kpp = base(p, p);
  if (!(kpp > 1e-14))
    throw degenerate_conditioning(
        "deflate: kernel '" + base.name() + "' has numerically zero diagonal at p=" +
        format_point(p) + " (K(p,p)=" + std::to_string(kpp) + ")");
  std::string name = base.name();
  const auto tag = name.find("-conditioned:");
  if (tag == std::string::npos)
    name += "-conditioned:" + format_point(p);
  else
    name += "," + format_point(p);
  Kernel b = base;  // capture by value: the result owns its base
  return Kernel(std::move(name), base.symmetry(), [b, p, kpp](double x, double y) {
    return b(x, y) - b(x, p) * b(p, y) / kpp;
  });
}

std::complex<double> PlanarGinibreKernel::operator()(std::complex<double> w,
                                                     std::complex<double> z) const {
  const double nw = std::norm(w), nz = std::norm(z);
  return std::exp(std::complex<double>(-0.5 * (nw + nz), 0.0) + w * std::conj(z)) /
         M_PI;
}

}  // namespace dpp
