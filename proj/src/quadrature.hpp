// Copyright 2026 The slcones Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <type_traits>
#include <string>

#include "slcones/error.hpp"

namespace slcones::detail {

inline constexpr double kQuadratureTarget = 1e-10;
inline constexpr std::size_t kQuadratureIntervals = 4000;

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

// Globally adaptive Gauss-Kronrod (GSL QAG, 61-point rule) on [a, b].
// Throws when the error estimate misses the target.
template <class F>
double integrate(F&& f, double a, double b, const char* what) {
  if (b <= a) return 0.0;
  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> work(
      gsl_integration_workspace_alloc(kQuadratureIntervals));
  gsl_function fn;
  fn.function = [](double x, void* data) { return (*static_cast<std::remove_reference_t<F>*>(data))(x); };
  fn.params = const_cast<void*>(static_cast<const void*>(&f));
  double value = 0.0;
  double error = 0.0;
  const int status = gsl_integration_qag(&fn, a, b, 1e-13, 1e-13, kQuadratureIntervals,
                                         GSL_INTEG_GAUSS61, work.get(), &value, &error);
  if (status != GSL_SUCCESS && !(error <= kQuadratureTarget)) {
    throw QuadratureError(std::string(what) + ": adaptive quadrature did not converge (" +
                          gsl_strerror(status) + ", error " + std::to_string(error) + ")");
  }
  return value;
}

}  // namespace slcones::detail
