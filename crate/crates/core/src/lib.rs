//! Social attitude reasoning for a virtual recruiter, and the choice of
//! non-verbal signal sequences that express it.
//!
//! * [`affect`]: recruiter emotions and moods from interviewee affects
//! * [`rules`]: attitudes from moods and personality
//! * [`circumplex`]: attitudes as a point in the friendliness/dominance plane
//! * [`corpus`]: annotated interactions, variation events, segments
//! * [`seqmine`]: frequent sequence mining and pattern scoring
//! * [`planner`]: sequence selection for an attitude change
//! * [`sim`]: scenario-driven simulation

pub mod affect;
pub mod circumplex;
pub mod config;
pub mod corpus;
pub mod error;
pub mod pipeline;
pub mod planner;
pub mod rules;
pub mod seqmine;
pub mod sim;
pub mod synth;

pub use error::{Error, Result};
