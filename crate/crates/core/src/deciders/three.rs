use crate::error::Result;
use crate::graph::Graph;

use super::{Ctx, Obstruction, Part};

fn spindle(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    Ok(ctx.search.spindle(h)?.map(Obstruction::pattern))
}

/// Odd antiholes of length at least 7 need 4 colors yet contain neither
/// an odd wheel nor a spindle; they are reported as themselves.
fn late(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    let found = ctx.search.odd_antihole(h, 7)?;
    if let Some(w) = &found {
        ctx.note(format!("found {}", w.kind));
    }
    Ok(found.map(Obstruction::pattern))
}

/// (bull, claw)-free: not 3-colorable exactly when a `W5` or a spindle
/// occurs.
pub(super) fn component_claw(ctx: &mut Ctx, h: &Graph) -> Result<Part> {
    if let Some(w) = ctx.search.odd_wheel(h, Some(5))? {
        return Ok(Part::Blocked(Obstruction::pattern(w)));
    }
    if let Some(o) = spindle(ctx, h)? {
        return Ok(Part::Blocked(o));
    }
    ctx.note("no W5 and no spindle");
    ctx.oracle_or_obstruction(h, late)
}

/// (bull, chair)-free: not 3-colorable exactly when an odd wheel or a
/// spindle occurs.
pub(super) fn component_chair(ctx: &mut Ctx, h: &Graph) -> Result<Part> {
    if let Some(w) = ctx.search.odd_wheel(h, None)? {
        return Ok(Part::Blocked(Obstruction::pattern(w)));
    }
    if let Some(o) = spindle(ctx, h)? {
        return Ok(Part::Blocked(o));
    }
    ctx.note("no odd wheel and no spindle");
    ctx.oracle_or_obstruction(h, late)
}
