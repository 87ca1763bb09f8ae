#pragma once

#include <stdexcept>
#include <string>

namespace laserep
{
// Input outside an operation's domain (negative field, NaN argument, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Kinematic failure: no physical root, degenerate laser.
class KinematicsError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// k·p = 0: particle co-moving with the wave front, Volkov factors diverge.
class CollinearLightlikeError : public KinematicsError
{
  public:
    using KinematicsError::KinematicsError;
};

// |q·q| below threshold: photon propagator pole.
class SingularKinematicsError : public KinematicsError
{
  public:
    using KinematicsError::KinematicsError;
};

// No final state for the requested photon exchange.
class ChannelClosedError : public KinematicsError
{
  public:
    using KinematicsError::KinematicsError;
};

// Numerical self-check failed (e.g. spin sum not real).
class ConsistencyError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};
}  // namespace laserep
