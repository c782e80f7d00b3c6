#pragma once

#include <memory>
#include <string>

#include "leavitt/graph.hpp"

namespace testing_support {

// Graphs used by name throughout the tests; the JSON copies live in tests/data.
//   a2:        v1 -e-> v2
//   a3:        v1 -e1-> v2 -e2-> v3
//   a3_fork:   a3 plus v2 -e3-> v4
//   c1:        loop e at v
//   c2, c3:    cycles v0 -> v1 (-> v2) -> v0 with edges e0, e1 (, e2)
//   toeplitz:  loop e at u, f: u -> z
//   emitter_loop: bundle w => v, loop f at w
//   rose2:     loops e, f at v
//   two_points: isolated p, q
//   bundle_fork: bundle a => b, g: a -> c
//   bundle_fork_loop: bundle_fork plus loop h at c
//   bundle_loop: bundle v => v
std::shared_ptr<const leavitt::Graph> fixture(const std::string& name);

std::string read_text_file(const std::string& path);
std::string data_path(const std::string& file);

}  // namespace testing_support
