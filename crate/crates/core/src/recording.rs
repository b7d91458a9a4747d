//! Continuous multichannel recordings with cue markers.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Per-channel signal modality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Modality {
    Eeg,
    Emg,
}

/// What a marker denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarkerKind {
    /// Task cue; carries the grasp class.
    CueOnset,
    /// Start of a rest period.
    RestOnset,
    /// Anything else found in the marker stream.
    Other,
}

/// A time-stamped event in a recording.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Marker {
    pub kind: MarkerKind,
    /// Grasp class in `[0, 4]`; present on every `CueOnset`.
    pub class_id: Option<u8>,
    pub sample_index: usize,
}

impl Marker {
    pub fn cue(class_id: u8, sample_index: usize) -> Self {
        Marker {
            kind: MarkerKind::CueOnset,
            class_id: Some(class_id),
            sample_index,
        }
    }
}

/// Continuous multichannel signal in microvolts, channels x samples.
///
/// Immutable after construction; all preprocessing returns new recordings.
#[derive(Debug, Clone, PartialEq)]
pub struct Recording<T: Scalar> {
    data: Array2<T>,
    fs_hz: f64,
    labels: Vec<String>,
    modality: Vec<Modality>,
    markers: Vec<Marker>,
}

impl<T: Scalar> Recording<T> {
    /// Builds a recording, checking the shape/marker invariants.
    pub fn new(
        data: Array2<T>,
        fs_hz: f64,
        labels: Vec<String>,
        modality: Vec<Modality>,
        markers: Vec<Marker>,
    ) -> Result<Self> {
        if fs_hz <= 0.0 || !fs_hz.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "sampling rate must be positive, got {fs_hz}"
            )));
        }
        if data.nrows() != labels.len() || labels.len() != modality.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} data rows, {} labels, {} modality entries",
                data.nrows(),
                labels.len(),
                modality.len()
            )));
        }
        let len = data.ncols();
        for m in &markers {
            if m.sample_index >= len {
                return Err(Error::MarkerOutOfRange {
                    sample: m.sample_index,
                    len,
                });
            }
        }
        Ok(Recording {
            data,
            fs_hz,
            labels,
            modality,
            markers,
        })
    }

    pub fn data(&self) -> &Array2<T> {
        &self.data
    }

    pub fn fs_hz(&self) -> f64 {
        self.fs_hz
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn modality(&self) -> &[Modality] {
        &self.modality
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn n_channels(&self) -> usize {
        self.data.nrows()
    }

    pub fn n_samples(&self) -> usize {
        self.data.ncols()
    }

    pub fn duration_s(&self) -> f64 {
        self.data.ncols() as f64 / self.fs_hz
    }

    /// Index of a channel by label.
    pub fn channel_index(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownChannel(name.to_string()))
    }

    /// Cue markers in stream order.
    pub fn cues(&self) -> impl Iterator<Item = &Marker> {
        self.markers
            .iter()
            .filter(|m| m.kind == MarkerKind::CueOnset)
    }

    /// Same recording with the data matrix replaced (shape must match).
    pub(crate) fn with_data(&self, data: Array2<T>) -> Self {
        debug_assert_eq!(data.dim(), self.data.dim());
        Recording {
            data,
            fs_hz: self.fs_hz,
            labels: self.labels.clone(),
            modality: self.modality.clone(),
            markers: self.markers.clone(),
        }
    }

    /// Decomposes the recording into its parts.
    pub fn into_parts(self) -> (Array2<T>, f64, Vec<String>, Vec<Modality>, Vec<Marker>) {
        (
            self.data,
            self.fs_hz,
            self.labels,
            self.modality,
            self.markers,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::arr2;

    #[test]
    fn rejects_marker_past_end() {
        let r = Recording::new(
            arr2(&[[0.0_f64, 1.0, 2.0]]),
            100.0,
            vec!["C3".into()],
            vec![Modality::Eeg],
            vec![Marker::cue(0, 3)],
        );
        assert!(matches!(r, Err(Error::MarkerOutOfRange { sample: 3, .. })));
    }

    #[test]
    fn rejects_label_shape_mismatch() {
        let r = Recording::<f64>::new(
            arr2(&[[0.0, 1.0], [2.0, 3.0]]),
            100.0,
            vec!["C3".into()],
            vec![Modality::Eeg],
            vec![],
        );
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn channel_lookup() {
        let r = Recording::new(
            arr2(&[[0.0_f32, 1.0], [2.0, 3.0]]),
            100.0,
            vec!["C3".into(), "EMG1".into()],
            vec![Modality::Eeg, Modality::Emg],
            vec![],
        )
        .unwrap();
        assert_eq!(r.channel_index("EMG1").unwrap(), 1);
        assert!(matches!(
            r.channel_index("XX9"),
            Err(Error::UnknownChannel(_))
        ));
    }
}
