//! The report behind the command line tool, as JSON.

use lintype::{run as analyze, AnalysisRequest, Command, Setting};

pub fn run() -> String {
    let mut req = AnalysisRequest::inline("y^4*z - x^5 + x^2*y^3", Setting::Projective, [Command::Analyze]);
    req.direct_rees = true;
    let (report, code) = analyze(&req);
    let mut v = report.comparable();
    v.as_object_mut().unwrap().remove("timings");
    format!("exit code {code}\n{}\n", serde_json::to_string_pretty(&v).unwrap())
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
