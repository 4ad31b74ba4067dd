package org.fixture.storage;

import java.io.IOException;
import java.io.OutputStream;

import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

public class StorageService {
    private static final Logger LOG = LoggerFactory.getLogger(StorageService.class);

    private OutputStream out;

    public boolean writeSnapshot(byte[] data) {
        try {
            out.write(data);
            out.flush();
            return true;
        } catch (IOException e) {
            LOG.error("Failed to write snapshot", e);
            return false;
        }
    }

    public boolean writeSnapshotQuietly(byte[] data) {
        try {
            out.write(data);
            return true;
        } catch (IOException e) {
            LOG.error("Failed to write snapshot");
            return false;
        }
    }
}
