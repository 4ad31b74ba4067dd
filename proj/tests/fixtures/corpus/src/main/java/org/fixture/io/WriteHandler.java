package org.fixture.io;

import java.nio.ByteBuffer;

import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

public class WriteHandler {
    private static final Logger LOG = LoggerFactory.getLogger(WriteHandler.class);

    public int handle(Channel channel, ByteBuffer buffer) {
        int n = channel.write(buffer);
        if (n < 0) {
            LOG.warn("Read request failed on channel {}", channel);
        }
        return n;
    }
}
