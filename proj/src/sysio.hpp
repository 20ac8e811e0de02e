/*
   Copyright 2026 The nsatz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Text formats:
//
//   system file        header "vars: x,y", then one generator per line
//   certificate file   "vars:" header, "a = <integer>", "cap = <k>",
//                      then one cofactor per line in generator order
//
// Lines starting with '#' and blank lines are skipped. CSV output uses
// RFC-4180-style quoting; all sweep serialization funnels through here so
// identical runs emit identical bytes.

#ifndef NSATZ_SYSIO_HPP
#define NSATZ_SYSIO_HPP

#include <string>
#include <vector>

#include "certify.hpp"

namespace nsatz::io {

certify::PolySystem parse_system(const std::string& text);
certify::PolySystem read_system_file(const std::string& path);
std::string format_system(const certify::PolySystem& system);

std::string format_certificate(const certify::Certificate& cert,
                               const std::vector<std::string>& vars);
certify::Certificate parse_certificate(const std::string& text,
                                       const certify::PolySystem& system);
certify::Certificate read_certificate_file(const std::string& path,
                                           const certify::PolySystem& system);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

// fixed float form used in every CSV so reruns are byte-identical
std::string format_double(double v);

std::string kps_sweep_csv(const std::vector<certify::KpsSweepRow>& rows);

}  // namespace nsatz::io

#endif
