pub mod absub;
pub mod chevalley;
pub mod exactq;
pub mod harness;
pub mod liealg;
pub mod rootsys;
