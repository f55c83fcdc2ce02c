use sixsplit::{SplitConfig, SplitError, Splitter};
use sixsplit_certify::{verify_split, FuzzReport, PointRecord};
use sixsplit_core::GeneralizedDisc;

use crate::document::{
    epsilon, parse, six_points, BugReport, DiscRecord, InputDocument, OutputDocument, SplitDocument, VerifyReport,
    TOOL_VERSION,
};
use crate::error::CliError;
use crate::render::{render_svg, View};

pub fn split(input: &str, tolerance: Option<f64>) -> Result<OutputDocument, CliError> {
    let doc: InputDocument = parse(input)?;
    let pts = six_points(&doc.points)?;
    let eps = epsilon(doc.tolerance, tolerance)?;
    let splitter = Splitter::new(SplitConfig { epsilon: eps, ..SplitConfig::default() })
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let records: Vec<PointRecord> = pts.iter().map(PointRecord::from).collect();
    let split = match splitter.split_six(&pts) {
        Ok(s) => s,
        Err(SplitError::Exhausted { transcript }) => {
            return Err(CliError::Exhausted(Box::new(BugReport {
                tool_version: TOOL_VERSION.into(),
                message: "all strategies exhausted".into(),
                points: records,
                transcript: transcript.iter().map(|t| t.to_string()).collect(),
            })))
        }
        Err(e) => return Err(CliError::Invalid(e.to_string())),
    };
    let discs = split.discs.iter().map(DiscRecord::from_disc).collect::<Result<Vec<_>, _>>()?;
    Ok(OutputDocument {
        tool_version: TOOL_VERSION.into(),
        points: records,
        pairing: split.pairing,
        discs,
        margin: split.margin,
        epsilon: eps,
        strategy: split.strategy,
        used_fallback: split.used_fallback,
        transcript: split.transcript.iter().map(|t| t.to_string()).collect(),
    })
}

fn three_discs(doc: &SplitDocument) -> Result<&[DiscRecord], CliError> {
    let discs = doc.discs.as_deref().ok_or_else(|| CliError::Invalid("missing field `discs`".into()))?;
    if discs.len() != 3 {
        return Err(CliError::Invalid(format!("expected three discs, got {}", discs.len())));
    }
    Ok(discs)
}

fn pick(discs: &[DiscRecord], prefer_plane: bool) -> Result<[GeneralizedDisc; 3], CliError> {
    Ok([discs[0].disc(prefer_plane)?, discs[1].disc(prefer_plane)?, discs[2].disc(prefer_plane)?])
}

/// Checks every form the document gives; passes only if all of them do.
pub fn verify(input: &str) -> Result<VerifyReport, CliError> {
    let doc: SplitDocument = parse(input)?;
    let pts = six_points(&doc.points)?;
    let discs = three_discs(&doc)?;
    let pairing = doc.pairing.ok_or_else(|| CliError::Invalid("missing field `pairing`".into()))?;
    if pairing.iter().flatten().any(|&i| i >= 6) {
        return Err(CliError::Invalid("pairing index out of range".into()));
    }
    let eps = epsilon(doc.tolerance, None)?;
    let certificate = verify_split(&pts, &pick(discs, false)?, &pairing, eps);
    let plane_certificate = if discs.iter().any(|d| d.cap.is_some() && d.plane.is_some()) {
        Some(verify_split(&pts, &pick(discs, true)?, &pairing, eps))
    } else {
        None
    };
    let pass = certificate.pass && plane_certificate.as_ref().is_none_or(|c| c.pass);
    Ok(VerifyReport { tool_version: TOOL_VERSION.into(), pass, certificate, plane_certificate })
}

pub fn fuzz(trials: u64, seed: u64, sampler: &str) -> Result<FuzzReport, CliError> {
    if trials == 0 {
        return Err(CliError::Invalid("--trials must be at least 1".into()));
    }
    sixsplit::fuzz_campaign(trials, seed, sampler).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn render(input: &str, view: View) -> Result<String, CliError> {
    let doc: SplitDocument = parse(input)?;
    let pts = six_points(&doc.points)?;
    let discs = match doc.discs {
        Some(_) => Some(pick(three_discs(&doc)?, false)?),
        None => None,
    };
    Ok(render_svg(&pts, discs.as_ref(), doc.pairing.as_ref(), view))
}
