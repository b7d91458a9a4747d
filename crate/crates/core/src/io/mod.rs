//! Recording I/O: the BrainVision triplet and the internal session bundle.

pub mod brainvision;
pub mod bundle;

pub use brainvision::{
    load_brainvision, parse_vhdr, parse_vmrk, read_brainvision, BinaryFormat, ChannelMeta,
    ClassMap, HeaderInfo, Orientation,
};
pub use bundle::{
    load_session_bundle, read_session_bundle, save_session_bundle, write_session_bundle,
    BundleManifest,
};

use crate::recording::Modality;

/// Default modality rule: labels starting with `EMG` (any case) are EMG
/// channels; everything else is EEG. `emg_channels` forces specific
/// labels to EMG regardless of name.
pub fn infer_modality(labels: &[String], emg_channels: &[String]) -> Vec<Modality> {
    labels
        .iter()
        .map(|l| {
            let forced = emg_channels.iter().any(|e| e == l);
            if forced || l.to_ascii_uppercase().starts_with("EMG") {
                Modality::Emg
            } else {
                Modality::Eeg
            }
        })
        .collect()
}
