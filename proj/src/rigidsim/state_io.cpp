/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/rigidsim/state_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rigidlcp {

void write_state(std::ostream& os, const MultibodySystem& sys) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::setprecision(17);
  os << "state " << sys.bodies.size() << ' ' << sys.time << '\n';
  for (std::size_t i = 0; i < sys.bodies.size(); ++i) {
    const RigidBody& b = sys.bodies[i];
    const Quat& q = b.orientation;
    os << "body " << i;
    for (double x : {b.position.x(), b.position.y(), b.position.z(), q.w(), q.x(), q.y(), q.z(),
                     b.linear_velocity.x(), b.linear_velocity.y(), b.linear_velocity.z(),
                     b.angular_velocity.x(), b.angular_velocity.y(), b.angular_velocity.z()})
      os << ' ' << x;
    os << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

void read_state(std::istream& is, MultibodySystem& sys) {
  std::string line;
  const auto next_record = [&]() {
    while (std::getline(is, line))
      if (!line.empty() && line[0] != '#') return true;
    return false;
  };
  const auto fail = [](const std::string& what) { throw std::runtime_error("state file: " + what); };

  if (!next_record()) fail("missing state header");
  std::istringstream header(line);
  std::string tag;
  std::size_t count = 0;
  double time = 0.0;
  if (!(header >> tag >> count >> time) || tag != "state") fail("bad header '" + line + "'");
  if (count != sys.bodies.size())
    fail("has " + std::to_string(count) + " bodies, system has " + std::to_string(sys.bodies.size()));

  std::vector<RigidBody> bodies = sys.bodies;
  for (std::size_t i = 0; i < count; ++i) {
    if (!next_record()) fail("missing body record " + std::to_string(i));
    std::istringstream rec(line);
    std::size_t index = 0;
    double x[13];
    if (!(rec >> tag >> index) || tag != "body" || index != i) fail("bad body record '" + line + "'");
    for (double& v : x)
      if (!(rec >> v)) fail("short body record '" + line + "'");
    RigidBody& b = bodies[i];
    b.position = Vec3(x[0], x[1], x[2]);
    b.orientation = Quat(x[3], x[4], x[5], x[6]);
    b.linear_velocity = Vec3(x[7], x[8], x[9]);
    b.angular_velocity = Vec3(x[10], x[11], x[12]);
  }
  sys.bodies = std::move(bodies);
  sys.time = time;
}

}  // namespace rigidlcp
