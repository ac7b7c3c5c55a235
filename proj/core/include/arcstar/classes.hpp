#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace arcstar {

/// The Ma-Minda comparison classes S*(psi) that the strip class is
/// measured against, identified by the shape of psi(D).
enum class Family {
    lemniscate,   // psi = sqrt(1+z)              (S*_L)
    cardioid,     // psi = 1 + 4z/3 + 2z^2/3      (S*_C)
    exponential,  // psi = e^z                    (S*_e)
    sigmoid,      // psi = 2/(1+e^{-z})           (S*_SG)
    wp,           // psi = 1 + z e^z              (S*_wp)
    crescent,     // psi = z + sqrt(1+z^2)        (Delta*)
};

/// A comparison target: the map psi with psi(0) = 1, the radius of the
/// largest disk |w-1| < delta inside psi(D), and the radial deviation
/// max_theta |psi(r e^{i theta}) - 1| in closed form.  Every psi here
/// attains its deviation on the real axis, which the tests re-validate
/// by sampling.
struct ClassDescriptor {
    Family family;
    std::string name;  // display name, e.g. "S*_L"
    std::string slug;  // short ASCII id, e.g. "L"
    std::function<std::complex<double>(std::complex<double>)> psi;
    double center_disk_radius = 0.0;
    std::function<double(double)> radial_deviation;
};

const ClassDescriptor& comparison_class(Family f);

/// All six classes, in the order of the Family enum.
const std::vector<ClassDescriptor>& comparison_classes();

}  // namespace arcstar
